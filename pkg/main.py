import sys

from recoloureur.cli import main

if __name__ == "__main__":
    sys.exit(main())
