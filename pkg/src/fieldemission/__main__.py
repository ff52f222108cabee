from fieldemission.cli import main

main()
