import sys

from hypernav.cli import main

sys.exit(main())
