from __future__ import annotations

from src.carry.lattice import CarryPoset, SubmoduleLattice


def poset_to_json(poset: CarryPoset) -> dict:
    return {
        "p": poset.p,
        "d": poset.d,
        "n": poset.n,
        "patterns": [
            {
                "pattern": c.to_json(),
                "factor": poset.factors[c].to_json(),
                "compositions": poset.class_sizes[c],
            }
            for c in poset.patterns
        ],
        "cover_edges": [[a.to_json(), b.to_json()] for a, b in poset.cover_edges],
    }


def lattice_to_json(lattice: SubmoduleLattice) -> dict:
    return {
        "poset": poset_to_json(lattice.poset),
        "nodes": [
            {
                "index": node.index,
                "ideal": [c.to_json() for c in node.ideal],
                "dimension": node.dimension,
                "factors": [f.to_json() for f in node.factors],
            }
            for node in lattice.nodes
        ],
        "edges": [
            {
                "lower": e.lower,
                "upper": e.upper,
                "pattern": e.pattern.to_json(),
                "factor": e.factor.to_json(),
            }
            for e in lattice.edges
        ],
    }


def poset_to_dot(poset: CarryPoset) -> str:
    index = {c: i for i, c in enumerate(poset.patterns)}
    lines = [f"digraph carry_poset_p{poset.p}_d{poset.d} {{", "  rankdir=BT;"]
    for c in poset.patterns:
        lines.append(f'  c{index[c]} [label="c={c}\\nL{poset.factors[c]}"];')
    for a, b in poset.cover_edges:
        lines.append(f"  c{index[a]} -> c{index[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_dot(lattice: SubmoduleLattice) -> str:
    poset = lattice.poset
    lines = [f"digraph submodules_p{poset.p}_d{poset.d}_n{poset.n} {{", "  rankdir=BT;"]
    for node in lattice.nodes:
        lines.append(f'  n{node.index} [label="dim={node.dimension}"];')
    for e in lattice.edges:
        lines.append(f'  n{e.lower} -> n{e.upper} [label="{e.factor}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
