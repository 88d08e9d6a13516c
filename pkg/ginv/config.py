import os

from dotenv import load_dotenv

env_path = os.path.join(os.path.dirname(__file__), '..', '.env')
load_dotenv(env_path)

# Largest finite abelian group whose automorphisms are enumerated.
AUT_BOUND = int(os.getenv("GI_AUT_BOUND") or 100_000)
# Largest number of candidate tuples examined by a single search.
TUPLE_BOUND = int(os.getenv("GI_TUPLE_BOUND") or 10_000_000)
INDEX_BOUND = int(os.getenv("GI_INDEX_BOUND") or 5)
REFINE_DEPTH = int(os.getenv("GI_REFINE_DEPTH") or 64)
LOG_LEVEL = os.getenv("GI_LOG_LEVEL") or "WARNING"
