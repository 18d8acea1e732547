from goddard.cli import run

run()
