import sys

from idealgraph.cli import main

sys.exit(main())
