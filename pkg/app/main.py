"""
FastAPI application factory.
Wires up middleware, routes and error mapping for the comparability Ramsey toolkit.
"""
from contextlib import asynccontextmanager

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from app.core import config
from app.core.errors import InvalidInput, LimitExceeded, RamseyToolkitError
from app.core.logging import get_logger
from app.core.metrics import LatencyMiddleware
from app.routes import checks, graphs, metrics, ramsey

logger = get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """
    Startup/shutdown lifecycle manager.
    Services are built lazily by their getters; startup only reports the caps in force.
    """
    logger.info("🚀 Starting comparability Ramsey toolkit...")
    logger.info(
        f"✅ Caps: poset order {config.MAX_POSET_ORDER}, graph order {config.MAX_GRAPH_ORDER}, "
        f"exact search {config.EXACT_SEARCH_CAP}, workers {config.RAMSEY_WORKERS}"
    )

    yield

    logger.info("👋 Shutting down...")


# Create FastAPI app
app = FastAPI(
    title="Comparability Ramsey Toolkit",
    description="Class Ramsey numbers, witnesses and ring/cone graph families",
    version="1.0.0",
    lifespan=lifespan
)

# Add latency tracking middleware
app.add_middleware(LatencyMiddleware)


def _status_for(error: RamseyToolkitError) -> int:
    if isinstance(error, InvalidInput):
        return 422
    if isinstance(error, LimitExceeded):
        return 413
    return 400


@app.exception_handler(RamseyToolkitError)
async def toolkit_error_handler(request: Request, error: RamseyToolkitError):
    status = _status_for(error)
    logger.warning(f"⚠️ {request.url.path}: {type(error).__name__}: {error}")
    return JSONResponse(status_code=status, content={"detail": str(error), "error": type(error).__name__})


# Include routers
app.include_router(graphs.router, tags=["Graphs"])
app.include_router(ramsey.router, tags=["Ramsey"])
app.include_router(checks.router, tags=["Checks"])
app.include_router(metrics.router, tags=["Metrics"])


@app.get("/")
async def root():
    """Health check endpoint."""
    return {
        "service": "comparability-ramsey",
        "status": "healthy",
        "endpoints": [
            "/graphs/generate", "/graphs/analyze",
            "/ramsey/witness", "/ramsey/verify-po", "/ramsey/verify-cone", "/ramsey/search",
            "/checks/{theorem_id}", "/metrics", "/docs",
        ],
    }
