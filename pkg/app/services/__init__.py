# Services - business logic layer
