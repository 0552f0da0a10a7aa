"""
FastAPI application exposing the Brauer design computations.

Features:
- Brauer diagram basis, Gram and Weingarten matrices
- Exact trace distance and design constraints
- Seeded Helstrom distinguishing experiments
- CORS enabled
"""

# -----------------------------------------------------------
# Imports
# -----------------------------------------------------------
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app import __version__
from app.api.endpoints.brauer import router as brauer_router
from app.api.endpoints.designs import router as designs_router
from app.api.endpoints.sampling import router as sampling_router
from app.core.config import settings
from app.core.logging import configure_logging


# -----------------------------------------------------------
# Lifespan: Logging Setup
# -----------------------------------------------------------
@asynccontextmanager
async def lifespan(app: FastAPI):
    configure_logging()
    yield


# -----------------------------------------------------------
# Initialize FastAPI App
# -----------------------------------------------------------
app = FastAPI(
    title=settings.PROJECT_NAME,
    description="Weingarten calculus for the orthogonal and unitary groups",
    version=__version__,
    lifespan=lifespan,
)


# -----------------------------------------------------------
# CORS Middleware
# -----------------------------------------------------------
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET"],
    allow_headers=["*"],
)


# -----------------------------------------------------------
# Computation Routes
# -----------------------------------------------------------
app.include_router(
    brauer_router,
    prefix="/api/v1/brauer",
    tags=["brauer"],
)

app.include_router(
    designs_router,
    prefix="/api/v1/designs",
    tags=["designs"],
)

app.include_router(
    sampling_router,
    prefix="/api/v1/sampling",
    tags=["sampling"],
)


# -----------------------------------------------------------
# Root Endpoint
# -----------------------------------------------------------
@app.get("/", tags=["root"])
async def root():
    return {"message": f"Welcome to the {settings.PROJECT_NAME} API", "version": __version__}
