"""Exact b-chromatic numbers, star-product constructions and closed-form values.

Graphs are built from expressions::

    >>> import bchroma
    >>> g = bchroma.parse_graph("prod(star:3,star:3)")
    >>> bchroma.b_chromatic_number(g)["phi"]
    5

Reports, certificates and formula results are plain dicts in the same
shape as the CLI's --json output.
"""

from ._core import (
    BudgetExceeded,
    Error,
    Graph,
    HypothesisError,
    ParseError,
    b_chromatic_number,
    cartesian_product,
    certificate_to_dot,
    chromatic_number,
    clique_number,
    color_line_star_product,
    color_power_star_product,
    color_star_product,
    color_total_star_product,
    complete,
    count_b_colorings,
    cycle,
    diameter,
    graph_from_json,
    graph_power,
    has_b_coloring,
    line_graph,
    line_star_product_graph,
    m_degree,
    m_degree_formula,
    parse_graph,
    path,
    phi_line_star_product,
    phi_rook_bounds,
    phi_star_product,
    phi_star_product_power,
    phi_total_star_product,
    power_star_product_graph,
    rook_grid_coloring,
    schema_version,
    star,
    star_product_graph,
    theorem_table,
    total_graph,
    total_star_product_graph,
    validate_certificate,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
