//! Text layouts copied from the GAP and MAGMA toric packages, so outputs can
//! be compared with recorded sessions.

use toric::{BinomialIdeal, Cone, IntVector, LatticePolytope, MonomialMap};

/// `[ 1, -2 ]`
pub fn gap_vector(v: &IntVector) -> String {
    gap_list(v.iter().map(|a| a.to_string()))
}

/// `[ a, b, c ]`, or `[  ]` when empty.
pub fn gap_list(items: impl IntoIterator<Item = String>) -> String {
    format!("[ {} ]", items.into_iter().collect::<Vec<_>>().join(", "))
}

pub fn gap_cone(c: &Cone) -> String {
    gap_list(c.generators().iter().map(gap_vector))
}

/// One item per indented line between brackets.
pub fn magma_list(items: impl IntoIterator<Item = String>) -> String {
    bracketed("[", "]", items)
}

fn bracketed(open: &str, close: &str, items: impl IntoIterator<Item = String>) -> String {
    let body: Vec<String> = items.into_iter().map(|s| format!("    {s}")).collect();
    if body.is_empty() {
        format!("{open}{close}")
    } else {
        format!("{open}\n{}\n{close}", body.join(",\n"))
    }
}

/// `(-6, 2)`
pub fn magma_point(v: &IntVector) -> String {
    format!("({})", v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "))
}

fn variables(prefix: &str, n: usize) -> String {
    (1..=n).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(", ")
}

pub fn ideal(i: &BinomialIdeal) -> String {
    format!(
        "Ideal of Polynomial ring of rank {n} over Rational Field\nLexicographical Order\nVariables: {}\nBasis:\n{}",
        variables("x", i.num_vars),
        magma_list(i.generators.iter().map(|g| g.format("x"))),
        n = i.num_vars
    )
}

/// The torus, presented by `x_i x_{n+i} = 1`, mapped into affine space.
pub fn torus_embedding(torus: &BinomialIdeal, map: &MonomialMap) -> String {
    let equations: Vec<String> = torus.generators.iter().map(|g| g.format("x")).collect();
    let t = map.target_dim();
    format!(
        "Mapping from: Scheme over Rational Field defined by\n{} to Affine Space of dimension {t}\nVariables : {}\nwith equations :\n{}",
        equations.join("\n"),
        variables("$.", t),
        map.format_torus_coordinates("x").join("\n")
    )
}

/// A map from affine space, written the way MAGMA prints it (source
/// coordinates appear as `$.i`).
pub fn affine_map(map: &MonomialMap) -> String {
    let t = map.target_dim();
    format!(
        "Mapping from: Affine Space of dimension {}\nVariables : {} to Affine Space of dimension {t}\nVariables : {}\nwith equations :\n{}",
        map.source_dim,
        variables("x", map.source_dim),
        variables("$.", t),
        map.format_coordinates("$.").join("\n")
    )
}

pub fn polytope(p: &LatticePolytope) -> String {
    let ineqs = p.canonical_inequalities().unwrap_or_else(|_| p.inequalities().to_vec());
    let rows = ineqs.iter().map(|h| format!("<{}, x> >= {}", magma_point(&h.normal), -&h.offset));
    let verts = p.vertices().iter().map(|v| {
        format!("({})", v.entries().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "))
    });
    format!("Inequalities:\n{}\nVertices:\n{}", magma_list(rows), magma_list(verts))
}

pub fn code_summary(n: usize, k: usize, d: Option<usize>, q: u64) -> String {
    match d {
        Some(d) => format!("[{n}, {k}, {d}] Linear Code over GF({q})"),
        None => format!("[{n}, {k}] Linear Code over GF({q})"),
    }
}

/// `( 0, 1, 2, 0 )` per line inside braces.
pub fn codewords(words: &[Vec<u32>]) -> String {
    bracketed(
        "{",
        "}",
        words.iter().map(|w| format!("( {} )", w.iter().map(u32::to_string).collect::<Vec<_>>().join(", "))),
    )
}
