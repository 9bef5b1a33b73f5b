import sys

from matchgap.cli import main

sys.exit(main())
