# Comparability-graph Ramsey toolkit: CLI and FastAPI service
