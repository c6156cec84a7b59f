import sys

from qja.cli import main

sys.exit(main())
