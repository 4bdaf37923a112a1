from pfaffcount.cli import main

main()
