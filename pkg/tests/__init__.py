from pathlib import PurePath as path
import sys

tests_path = str(path(__file__).parent)
repository_path = str(path(__file__).parents[1])

# test modules import context and model_strategies as top-level modules
sys.path.insert(0, tests_path)
sys.path.insert(0, repository_path)
