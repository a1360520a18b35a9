# Domain models - internal representations separate from API schemas
