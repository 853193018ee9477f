//! Registry of builtin example algebras.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::lie::LieAlgebraPresentation;

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Abelian algebra on `x1, …, xn`.
pub fn abelian(n: usize) -> LieAlgebraPresentation {
    LieAlgebraPresentation::new(
        format!("abelian:{n}"),
        (1..=n).map(|i| format!("x{i}")).collect(),
    )
}

/// `[h, x] = x`.
pub fn nonabelian2() -> LieAlgebraPresentation {
    LieAlgebraPresentation::new("nonabelian2", labels(&["h", "x"])).with_bracket(0, 1, &[(1, 1)])
}

/// `[x, y] = z`.
pub fn heisenberg() -> LieAlgebraPresentation {
    LieAlgebraPresentation::new("heisenberg", labels(&["x", "y", "z"])).with_bracket(0, 1, &[(2, 1)])
}

/// Basis `(h, e, f)`: `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebraPresentation {
    LieAlgebraPresentation::new("sl2", labels(&["h", "e", "f"]))
        .with_bracket(0, 1, &[(1, 2)])
        .with_bracket(0, 2, &[(2, -2)])
        .with_bracket(1, 2, &[(0, 1)])
}

/// Matrix units `e11, e12, e21, e22`.
pub fn gl2() -> LieAlgebraPresentation {
    LieAlgebraPresentation::new("gl2", labels(&["e11", "e12", "e21", "e22"]))
        .with_bracket(0, 1, &[(1, 1)])
        .with_bracket(0, 2, &[(2, -1)])
        .with_bracket(1, 2, &[(0, 1), (3, -1)])
        .with_bracket(1, 3, &[(1, 1)])
        .with_bracket(2, 3, &[(2, -1)])
}

/// Upper triangular 2×2 matrices `e11, e12, e22`.
pub fn borel2() -> LieAlgebraPresentation {
    LieAlgebraPresentation::new("borel2", labels(&["e11", "e12", "e22"]))
        .with_bracket(0, 1, &[(1, 1)])
        .with_bracket(1, 2, &[(1, 1)])
}

/// The three-dimensional solvable family on `h, x, y` with
/// `[h, x] = n x`, `[h, y] = m y`, `[x, y] = 0`; requires `n, m > 0` coprime.
pub fn remark(n: i64, m: i64) -> Option<LieAlgebraPresentation> {
    if n <= 0 || m <= 0 || num_integer::gcd(n, m) != 1 {
        return None;
    }
    Some(
        LieAlgebraPresentation::new(format!("remark:{n}:{m}"), labels(&["h", "x", "y"]))
            .with_bracket(0, 1, &[(1, n)])
            .with_bracket(0, 2, &[(2, m)]),
    )
}

/// Names accepted by [`lookup`], with parameter placeholders.
pub const NAMES: &[&str] = &[
    "abelian:N",
    "nonabelian2",
    "heisenberg",
    "sl2",
    "gl2",
    "borel2",
    "remark:N:M",
];

/// Resolve a registry name such as `sl2`, `abelian:4` or `remark:1:2`.
pub fn lookup(name: &str) -> Option<LieAlgebraPresentation> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["abelian", n] => n.parse::<usize>().ok().filter(|&n| n >= 1).map(abelian),
        ["nonabelian2"] => Some(nonabelian2()),
        ["heisenberg"] => Some(heisenberg()),
        ["sl2"] => Some(sl2()),
        ["gl2"] => Some(gl2()),
        ["borel2"] => Some(borel2()),
        ["remark", n, m] => remark(n.parse().ok()?, m.parse().ok()?),
        _ => None,
    }
}

/// A representative instance of every registry entry.
pub fn all() -> Vec<LieAlgebraPresentation> {
    let mut v: Vec<LieAlgebraPresentation> = ["abelian:2", "nonabelian2", "heisenberg", "sl2", "gl2", "borel2"]
        .iter()
        .filter_map(|n| lookup(n))
        .collect();
    for (n, m) in [(1, 1), (1, 2), (2, 3)] {
        v.push(remark(n, m).expect("coprime"));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{index_rational, validate_presentation};

    #[test]
    fn registry_resolves_and_validates() {
        for pres in all() {
            assert!(validate_presentation(&pres).is_ok(), "{}", pres.name());
            assert_eq!(lookup(pres.name()).as_ref(), Some(&pres));
        }
        assert!(lookup("remark:2:4").is_none());
        assert!(lookup("abelian:0").is_none());
        assert!(lookup("so3").is_none());
    }

    #[test]
    fn registry_indices() {
        let expect = [
            ("remark:1:1", 3, 1),
            ("abelian:4", 4, 4),
            ("gl2", 4, 2),
            ("borel2", 3, 1),
            ("sl2", 3, 1),
        ];
        for (name, dim, ind) in expect {
            let pres = lookup(name).unwrap();
            assert_eq!(pres.dim(), dim);
            assert_eq!(index_rational(&pres, 3, 0).index, ind, "{name}");
        }
    }
}
