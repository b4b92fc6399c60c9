"""
Ponto de entrada do crossdim
Álgebra de sistemas lineares entre dimensões e transientes de dimensão
"""
import sys

from src.cli.main import main


if __name__ == "__main__":
    sys.exit(main())
