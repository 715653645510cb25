import sys

from squintpy.cli import main

sys.exit(main())
