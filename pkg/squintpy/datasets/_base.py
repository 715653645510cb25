import pathlib

DATA_HOME = pathlib.Path(__file__).parent.joinpath("data")


def filepath(fn: str) -> str:
    fp = DATA_HOME.joinpath(fn)
    if not fp.exists():
        raise FileNotFoundError(f"bundled data file {fn} is missing from {DATA_HOME}")
    return fp.as_posix()
