"""
Script principal do `subrayleigh`.

Encaminha os argumentos para a interface de linha de comando, por exemplo:

    python main.py bounds --psf gaussian --receiver spade --grid 0.01:3:200
    python main.py mse-sim --grid 0.1:1:10 --N 1000 --trials 500 --seed 7
"""

import sys
import time

from subrayleigh.cli import main

if __name__ == "__main__":
    inicio_t = time.time()
    codigo = main()
    print(f"⏱️ Tempo total: {(time.time() - inicio_t):.2f} segundos", file=sys.stderr)
    sys.exit(codigo)
