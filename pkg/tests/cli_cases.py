"""One invocation per subcommand, all expected to exit 0."""

CASES = [
    "pythagoras triples --limit 50",
    "pythagoras reducible 1 2 1",
    "pythagoras reducible 1 1 1",
    "pythagoras search --n 1 --bound 20",
    "pythagoras search --n 3 --bound 60",
    "pythagoras variant --kind plus6 5 2",
    "pythagoras variant --kind minus2m 2 1 3",
    "legendre check 2 3 5",
    "legendre check 1 1 3",
    "legendre solve 1 1 2",
    "legendre enum 1 1 2 --bound 10",
    "legendre reduce 8 45 7 --n 3",
    "legendre abel 1 1 2 --bound 10",
    "legendre frey 1 2 3 --n 3",
    "zmodule thm22 --s 3 4 5 --k 2",
    "zmodule thm22 --s 3 4 5 --k 2 --l0 1,3,3 --l1 3,4,5",
    "zmodule sweep --samples 200",
    "zmodule cor23 --s 3 4 5 --k 2 --m0 1,0,0 --m1 10,16,25",
    "zmodule euler-scan --n 4 --bound 30",
    "quad conj-check --samples 200",
    "quad prop36 --xmax 6 --prange 2",
    "quad prop37 --xmax 5",
    "quad flt-sqrt2 --n 2 --cbound 3",
    "exp solve 5 6 7",
    "exp classify 2 3 4",
    "exp classify 3 4 5",
    "exp const-scan --cmax 20",
    "exp integer-scan --cmax 20",
    "scan flt --nmax 5 --zmax 40",
]
