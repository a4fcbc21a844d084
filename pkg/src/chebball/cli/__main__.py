from chebball.cli.main import main

raise SystemExit(main())
