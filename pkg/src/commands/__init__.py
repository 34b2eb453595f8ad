# Command-line subcommands, one module per group (registered in packing_cli.py)
