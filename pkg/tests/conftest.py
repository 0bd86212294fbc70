def pytest_addoption(parser):
    parser.addoption(
        "--slow",
        action="store_true",
        dest="slow",
        default=False,
        help=(
            "Enable exhaustive checks at the largest desk-scale sizes "
            "(labeled forests with 4 nodes, annotated 1-sketches of size 4, 8! letter orders)."
        ),
    )
