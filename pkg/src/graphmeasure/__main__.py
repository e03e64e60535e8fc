from graphmeasure.cli import main

main()
