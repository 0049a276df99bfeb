import sys

from circlearea.cli import main

sys.exit(main())
