import os

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURE_DIR, name)


def _data_lines(name):
    with open(fixture_path(name)) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                yield line


def load_count_table(name):
    """Parse 'n count' lines into a dict."""
    out = {}
    for line in _data_lines(name):
        n, c = line.split()
        out[int(n)] = int(c)
    return out


def load_coeff_table(name):
    """Parse 'k1 k2 ... | c0 c1 ...' lines into {key tuple: coeff list}."""
    out = {}
    for line in _data_lines(name):
        head, _, tail = line.partition("|")
        key = tuple(int(t) for t in head.split())
        out[key] = [int(t) for t in tail.split()]
    return out
