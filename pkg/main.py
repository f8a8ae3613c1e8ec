"""
graphss command-line entry point

Usage:
    python main.py verify-pr --design meyer --n 64
    python main.py denoise --graph sensor --n 100 --sigma 0.25 --design cdf97 \
        --laplacian combinatorial --runs 100 --seed 1 --output denoise.csv
"""

from graphss.cli.commands import main

if __name__ == "__main__":
    main()
