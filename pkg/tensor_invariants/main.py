import sys
from tensor_invariants.cli import main

if __name__ == "__main__":
    sys.exit(main())
