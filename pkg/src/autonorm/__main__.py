from autonorm.cli.main import main

raise SystemExit(main())
