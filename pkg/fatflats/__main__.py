from fatflats.cli import main

main()
