"""Service layer: pydantic models, pure handlers, and the FastAPI app."""
