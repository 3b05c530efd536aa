from supercohom.cli import main

raise SystemExit(main())
