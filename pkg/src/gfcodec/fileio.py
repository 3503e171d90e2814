"""Plain-text file formats: field configs, vectors, seed files, residual
packages, and sparse models.  One value per line, `key=value` headers,
elements as decimal canonical integers."""

from .residual import ResidualPackage
from .sparse import SparseResidualModel
from .spectral import OrbitSeedVector
from .tower import build_tower


def parse_field_config(text):
    """Parse `p`, `k_modulus`, `l_modulus` keys and build the tower."""
    values = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, val = line.partition("=")
        values[key.strip()] = val.strip()
    p = int(values["p"])
    k_modulus = [int(c) for c in values["k_modulus"].split(",")]
    l_modulus = [int(c) for c in values["l_modulus"].split(",")]
    return build_tower(p, k_modulus, l_modulus)


def load_field_config(path):
    with open(path) as fh:
        return parse_field_config(fh.read())


def format_field_config(p, k_modulus, l_modulus):
    return (
        f"p={p}\n"
        f"k_modulus={','.join(str(c) for c in k_modulus)}\n"
        f"l_modulus={','.join(str(c) for c in l_modulus)}\n"
    )


def read_vector(tower, text):
    """One canonical integer per line."""
    return [
        tower.el(int(line))
        for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    ]


def write_vector(v):
    return "".join(f"{x.value}\n" for x in v)


def write_base_vector(values):
    return "".join(f"{u}\n" for u in values)


def write_seeds(osv):
    """Lines `leader:length:canonical_int`."""
    out = []
    for cls, b in zip(osv.partition.classes, osv.seeds):
        out.append(f"{cls.leader}:{cls.length}:{b.value}\n")
    return "".join(out)


def read_seeds(tower, partition, text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != partition.kappa:
        raise ValueError(
            f"expected {partition.kappa} seed lines, got {len(lines)}"
        )
    seeds = []
    for cls, line in zip(partition.classes, lines):
        leader, length, value = (int(x) for x in line.split(":"))
        if leader != cls.leader or length != cls.length:
            raise ValueError(f"seed line {line!r} does not match class {cls}")
        seeds.append(tower.el(value))
    return OrbitSeedVector(partition=partition, seeds=tuple(seeds))


def write_package(pkg):
    """Header `n=...`, `mode=...`, seed lines, then residual lines `i:value`."""
    out = [f"n={pkg.n}\n", f"mode={pkg.mode}\n"]
    out.append(write_seeds(pkg.seeds))
    for i, h in pkg.residual:
        out.append(f"{i}:{h.value}\n")
    return "".join(out)


def read_package(tower, partition, text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    header = {}
    while lines and "=" in lines[0]:
        key, _, val = lines.pop(0).partition("=")
        header[key] = val
    n = int(header["n"])
    mode = header.get("mode", "full")
    seed_lines = lines[: partition.kappa]
    osv = read_seeds(tower, partition, "\n".join(seed_lines))
    residual = []
    for line in lines[partition.kappa :]:
        i, _, value = line.partition(":")
        residual.append((int(i), tower.el(int(value))))
    return ResidualPackage(seeds=osv, residual=tuple(residual), mode=mode, n=n)


def write_sparse_model(model):
    """Lines `e:canonical_int(a)`."""
    return "".join(f"{e}:{a.value}\n" for a, e in model.terms)


def read_sparse_model(tower, n, text):
    terms = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        e, _, value = line.partition(":")
        terms.append((tower.el(int(value)), int(e)))
    terms.sort(key=lambda t: t[1])
    return SparseResidualModel(n=n, terms=tuple(terms))
