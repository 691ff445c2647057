import sys

from hhcalc.cli import main

sys.exit(main())
