import sys

from kla2.cli import main

sys.exit(main())
