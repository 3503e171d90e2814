"""Trace-table direct transform for class-consistent vectors.

The spectrum of a class-consistent vector is a sum, over cyclotomic
classes, of relative traces Tr((omega^c)^j * seed), so after tabulating
those traces for every possible seed the transform is one table lookup per
class plus base-field additions.  Outputs always land in the base field.
"""

from dataclasses import dataclass, field

from .errors import MemoryCapExceeded, SeedNotInSubfield, TableMismatch

DEFAULT_MEMORY_CAP = 2**26  # K-entries


@dataclass
class OpCounter:
    lookups: int = 0
    additions: int = 0


@dataclass
class TraceTableSet:
    partition: object
    omega: object
    n: int
    # per class: {seed canonical int -> tuple of n base-field canonical ints}
    tables: list = field(default_factory=list)


def table_size_estimate(tower, partition):
    """n * sum(q^ell) K-entries."""
    return partition.n * sum(tower.q**c.length for c in partition.classes)


def build_trace_tables(tower, partition, omega, memory_cap=DEFAULT_MEMORY_CAP):
    """Precompute, per class, the K-vector Tr((omega^c)^j * beta) for every
    beta in the class's native subfield."""
    estimate = table_size_estimate(tower, partition)
    if estimate > memory_cap:
        raise MemoryCapExceeded(
            f"trace tables need {estimate} K-entries, cap is {memory_cap}"
        )
    n = partition.n
    tables = []
    for cls in partition.classes:
        ell = cls.length
        root = tower.pow(omega, cls.leader)
        powers = [tower.pow(root, j) for j in range(n)]
        rows = {}
        for beta in tower.subfield_elements(ell):
            row = tuple(
                tower.as_base(tower.rel_trace(tower.mul(powers[j], beta), ell))
                for j in range(n)
            )
            rows[beta.value] = row
        tables.append(rows)
    return TraceTableSet(partition=partition, omega=omega, n=n, tables=tables)


def trace_dft(tower, osv, tables, counter=None):
    """Transform orbit seeds straight to the base-field spectrum.

    Equals dft(expand_seeds(osv)) coordinatewise; performs exactly kappa
    lookups and at most n*(kappa-1) K-additions (tracked in `counter`).
    """
    partition = osv.partition
    if tables.partition is not partition and (
        tables.partition.n != partition.n or tables.partition.q != partition.q
    ):
        raise TableMismatch("tables built for a different partition")
    if len(tables.tables) != partition.kappa:
        raise TableMismatch("table count does not match class count")
    if counter is None:
        counter = OpCounter()
    n = partition.n
    out = [0] * n
    first = True
    for cls, b, rows in zip(partition.classes, osv.seeds, tables.tables):
        if b.value not in rows:
            raise SeedNotInSubfield(
                f"seed {b.value} not in GF(q^{cls.length}) table for class {cls.leader}"
            )
        row = rows[b.value]
        counter.lookups += 1
        if first:
            out = list(row)
            first = False
        else:
            for j in range(n):
                out[j] = tower.k_add(out[j], row[j])
                counter.additions += 1
    return out
