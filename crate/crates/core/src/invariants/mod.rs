//! Numerical invariants read off CFK-infinity models.

mod builders;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::cfk::{
    canceling_check, euler_characteristic, hat, hat_homology, mirror_dual, reduce, symmetry_check,
    BigradedGroup, CfkComplex,
};
use crate::error::{Error, Result};
use crate::f2core::{graded_homology_fu, F2Poly, F2UMatrix, UModule};

pub use builders::{rank3_enumerate, rank3_model, staircase_complex, thin_complex, torus_delta};

/// Hat homology of `c`, required to be a single F in Maslov grading 0.
fn canceling_homology(c: &CfkComplex) -> Result<BigradedGroup> {
    let h = hat_homology(&hat(c)?)?;
    if !canceling_check(&h) {
        return Err(Error::NotCanceling);
    }
    Ok(h)
}

/// Least Alexander grading of a cycle generating hat homology.
pub fn tau(c: &CfkComplex) -> Result<i64> {
    let h = canceling_homology(c)?;
    let a = h.iter().next().map(|((_, a), _)| a).expect("rank one");
    Ok(a)
}

/// Builds the free F[U]-complex on basis `gens` with the given U-exponent
/// offsets; `shift[x]` is the power of U carried by the basis element of x.
fn u_complex(c: &CfkComplex, keep: impl Fn(i64, u32, i64) -> bool, shift: &[i64]) -> Result<F2UMatrix> {
    let index: HashMap<&str, usize> =
        c.generators.iter().enumerate().map(|(i, g)| (g.name.as_str(), i)).collect();
    let n = c.generators.len();
    let mut entries = Vec::new();
    for t in &c.differential {
        let (f, to) = (index[t.from.as_str()], index[t.to.as_str()]);
        let (af, at) = (c.generators[f].alexander, c.generators[to].alexander);
        if !keep(af, t.upower, at) {
            continue;
        }
        let k = shift[f] + t.upower as i64 - shift[to];
        let k = usize::try_from(k).map_err(|_| Error::InvalidComplex("negative U power".into()))?;
        entries.push(((to, f), F2Poly::monomial(k)));
    }
    F2UMatrix::from_entries(n, n, entries)
}

/// HFK-minus as a bigraded F[U]-module, U of bidegree (-2, -1).
pub fn hfk_minus(c: &CfkComplex) -> Result<UModule> {
    canceling_homology(c)?;
    let r = reduce(c)?;
    let shift = vec![0; r.generators.len()];
    // associated graded for the j filtration: keep terms with A(to) - k = A(from)
    let d = u_complex(&r, |af, k, at| at - k as i64 == af, &shift)?;
    let gr: Vec<(i64, i64)> = r.generators.iter().map(|g| (g.maslov, g.alexander)).collect();
    graded_homology_fu(&d, &gr, (-2, -1))
}

/// d-value of the hook quotient A_s, normalized so the unknot gives 0.
///
/// Computed from the subcomplex {i < 0, j < s}: it is free over F[U] on
/// U^{k_x} x with k_x = max(1, A(x) - s + 1), and its homology has a single
/// free summand in Maslov grading D; the value returned is D + 2.
pub fn dval(c: &CfkComplex, s: i64) -> Result<i64> {
    canceling_homology(c)?;
    let shift: Vec<i64> = c.generators.iter().map(|g| (g.alexander - s + 1).max(1)).collect();
    let d = u_complex(c, |_, _, _| true, &shift)?;
    let gr: Vec<(i64, i64)> =
        c.generators.iter().zip(&shift).map(|(g, &k)| (g.maslov - 2 * k, 0)).collect();
    let h = graded_homology_fu(&d, &gr, (-2, 0))?;
    match h.free_summands.as_slice() {
        [f] => Ok(f.maslov + 2),
        _ => Err(Error::NotCanceling),
    }
}

/// (dval(unknot, m) - dval(c, m)) / 2.
pub fn hbar(c: &CfkComplex, m: i64) -> Result<i64> {
    let diff = dval(&CfkComplex::unknot(), m)? - dval(c, m)?;
    if diff % 2 != 0 {
        return Err(Error::NonIntegral(diff));
    }
    Ok(diff / 2)
}

/// Upper bound for h_m of a knot with four-ball genus `g4`.
pub fn rasmussen_bound(g4: i64, m: i64) -> i64 {
    let m = m.abs();
    if m >= g4 {
        0
    } else {
        (g4 - m + 1) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub s: i64,
    pub dval: i64,
    pub hbar: i64,
    pub rasmussen_bound: i64,
    pub contradiction: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub genus: i64,
    pub tau: i64,
    pub condition_tau_top: bool,
    pub condition_maslov_gap: bool,
    pub obstructed: bool,
    pub certificate: Option<Certificate>,
}

/// Tests whether the hat data of `c` is ruled out as the knot Floer
/// homology of a knot: tau equal to the top grading and nothing in Maslov
/// grading -1 at the top two Alexander gradings.
pub fn obstruction_check(c: &CfkComplex) -> Result<ObstructionReport> {
    let v = hat(c)?;
    let h = hat_homology(&v)?;
    if !canceling_check(&h) {
        return Err(Error::NotCanceling);
    }
    let group = v.group();
    if !symmetry_check(&group) {
        return Err(Error::NotSymmetric);
    }
    let g = group.max_alexander().ok_or(Error::EmptyGroup)?;
    let t = h.iter().next().map(|((_, a), _)| a).expect("rank one");
    let condition_tau_top = t == g;
    let condition_maslov_gap = g >= 1 && group.rank(-1, g) == 0 && group.rank(-1, g - 1) == 0;
    let obstructed = condition_tau_top && condition_maslov_gap;
    let certificate = if obstructed {
        let s = g - 2;
        let d = dval(c, s)?;
        let hb = hbar(c, s)?;
        let bound = rasmussen_bound(g, s);
        Some(Certificate { s, dval: d, hbar: hb, rasmussen_bound: bound, contradiction: hb > bound })
    } else {
        None
    };
    Ok(ObstructionReport {
        genus: g,
        tau: t,
        condition_tau_top,
        condition_maslov_gap,
        obstructed,
        certificate,
    })
}

/// Same check applied to the mirror; used for patterns with tau = -g.
pub fn obstruction_check_mirror(c: &CfkComplex) -> Result<ObstructionReport> {
    obstruction_check(&mirror_dual(c)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LspaceReport {
    pub passes: bool,
    pub reasons: Vec<String>,
}

pub const REASON_RANK: &str = "rank > 1 in a grading";
pub const REASON_TOP: &str = "top grading not rank 1 at Maslov 0";
pub const REASON_SECOND_EMPTY: &str = "grading g−1 empty";
pub const REASON_SECOND_MASLOV: &str = "grading g−1 not at Maslov −1";
pub const REASON_EULER: &str = "euler characteristic not alternating ±1";

/// Necessary conditions on HFK-hat of an L-space knot.
pub fn lspace_check(g: &BigradedGroup) -> Result<LspaceReport> {
    if g.is_empty() {
        return Err(Error::EmptyGroup);
    }
    if !symmetry_check(g) {
        return Err(Error::NotSymmetric);
    }
    let by_a = g.by_alexander();
    let top = g.max_alexander().expect("nonempty");
    let mut reasons = Vec::new();
    if by_a.values().any(|&r| r > 1) {
        reasons.push(REASON_RANK.to_string());
    }
    if by_a[&top] != 1 || g.rank(0, top) != 1 {
        reasons.push(REASON_TOP.to_string());
    }
    if top >= 1 {
        match by_a.get(&(top - 1)) {
            None => reasons.push(REASON_SECOND_EMPTY.to_string()),
            Some(&r) => {
                if r != 1 || g.rank(-1, top - 1) != 1 {
                    reasons.push(REASON_SECOND_MASLOV.to_string());
                }
            }
        }
    }
    let chi = euler_characteristic(g);
    let coeffs: Vec<i64> = chi.terms().rev().map(|(_, c)| c).collect();
    let alternating = coeffs.first() == Some(&1)
        && coeffs.iter().all(|c| c.abs() == 1)
        && coeffs.windows(2).all(|w| w[0] == -w[1]);
    if !alternating {
        reasons.push(REASON_EULER.to_string());
    }
    Ok(LspaceReport { passes: reasons.is_empty(), reasons })
}

/// Top supported Alexander grading.
pub fn genus(g: &BigradedGroup) -> Result<i64> {
    g.max_alexander().ok_or(Error::EmptyGroup)
}

/// Rank one in the top Alexander grading.
pub fn fibered(g: &BigradedGroup) -> Result<bool> {
    let top = genus(g)?;
    Ok(g.by_alexander()[&top] == 1)
}
