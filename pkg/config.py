import os
from dotenv import load_dotenv

# Load all variables from .env file into environment
load_dotenv()


class Config:
    SEED = int(os.getenv("CHARNUM_SEED", "20240101"))

    LOG_LEVEL = os.getenv("CHARNUM_LOG_LEVEL", "WARNING")

    # Largest dimension the command line accepts
    MAX_DIM = int(os.getenv("CHARNUM_MAX_DIM", "12"))

    JSON_INDENT = int(os.getenv("CHARNUM_JSON_INDENT", "2"))

    ROUNDTRIP_SAMPLES = int(os.getenv("CHARNUM_ROUNDTRIP_SAMPLES", "100"))

    # Lower entries of random generator families are drawn from this range
    RANDOM_FAMILY_RANGE = (-9, 9)


# Create a single config instance
config = Config()
