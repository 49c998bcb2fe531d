use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{obstruction_check, obstruction_check_mirror};
use crate::cfk::{
    canceling_check, hat_homology, mirror_dual, BigradedGroup, CfkComplex, CfkGenerator, CfkTerm,
    LaurentPoly, VerticalComplex, VerticalTerm,
};
use crate::error::{Error, Result};

/// Symmetrized Alexander polynomial of the (p, q) torus knot.
pub fn torus_delta(p: u32, q: u32) -> LaurentPoly {
    assert!(p >= 1 && q >= 1, "torus knot parameters must be positive");
    let (p, q) = (p as usize, q as usize);
    // ordinary polynomial, index = exponent
    let mut num = vec![0i64; p * q + 2];
    // (t^{pq} - 1)(t - 1)
    num[p * q + 1] += 1;
    num[p * q] -= 1;
    num[1] -= 1;
    num[0] += 1;
    for d in [p, q] {
        // exact division by t^d - 1, from the top
        let mut quo = vec![0i64; num.len()];
        let mut rem = num.clone();
        for e in (d..rem.len()).rev() {
            let c = rem[e];
            if c != 0 {
                quo[e - d] += c;
                rem[e] -= c;
                rem[e - d] += c;
            }
        }
        debug_assert!(rem.iter().all(|&c| c == 0));
        num = quo;
    }
    let deg = ((p - 1) * (q - 1)) as i64;
    LaurentPoly::from_terms(num.iter().enumerate().map(|(e, &c)| (e as i64 - deg / 2, c)))
}

fn gen(name: String, maslov: i64, alexander: i64) -> CfkGenerator {
    CfkGenerator { name, maslov, alexander }
}

fn term(from: &str, to: &str, upower: u32) -> CfkTerm {
    CfkTerm { from: from.to_string(), to: to.to_string(), upower }
}

/// Staircase complex of an L-space knot polynomial
/// t^{n_0} - t^{n_1} + ... + t^{n_{2k}}.
///
/// Generators x_0..x_{2k} with A(x_j) = n_j and M(x_0) = 0; each odd x_{2j+1}
/// maps to U^{n_{2j} - n_{2j+1}} x_{2j} and to x_{2j+2}. The second exponent
/// must be n_0 - 1.
pub fn staircase_complex(delta: &LaurentPoly) -> Result<CfkComplex> {
    let fail = |why: &str| Err(Error::NotStaircaseShape(format!("{delta}: {why}")));
    let terms: Vec<(i64, i64)> = delta.terms().rev().collect();
    if terms.is_empty() {
        return fail("zero polynomial");
    }
    if terms[0].1 != 1 {
        return fail("leading coefficient is not +1");
    }
    if terms.iter().any(|&(_, c)| c.abs() != 1) || terms.windows(2).any(|w| w[0].1 != -w[1].1) {
        return fail("coefficients are not alternating ±1");
    }
    if !delta.is_symmetric() || delta.eval_one() != 1 {
        return fail("not symmetric with value 1 at t = 1");
    }
    if terms.len() > 1 && terms[1].0 != terms[0].0 - 1 {
        return fail("second exponent is not one below the top");
    }
    let exps: Vec<i64> = terms.iter().map(|&(e, _)| e).collect();
    let mut generators = Vec::with_capacity(exps.len());
    let mut differential = Vec::new();
    let mut m = 0i64;
    for (j, &a) in exps.iter().enumerate() {
        if j > 0 {
            if j % 2 == 1 {
                let gap = exps[j - 1] - a;
                m = m - 2 * gap + 1;
            } else {
                m -= 1;
            }
        }
        generators.push(gen(format!("x{j}"), m, a));
    }
    for j in (1..exps.len()).step_by(2) {
        let gap = u32::try_from(exps[j - 1] - exps[j]).map_err(|_| Error::Overflow("U power"))?;
        let (me, prev, next) = (format!("x{j}"), format!("x{}", j - 1), format!("x{}", j + 1));
        differential.push(term(&me, &prev, gap));
        differential.push(term(&me, &next, 0));
    }
    Ok(CfkComplex { generators, differential })
}

/// A thin model complex with hat ranks |coefficients of delta| on the
/// diagonal m = a + sigma/2 and tau = -sigma/2.
///
/// The complex is the staircase of T(2, 2|tau| + 1) (mirrored when tau < 0)
/// plus acyclic unit boxes p, s, r, w with dp = r + U s, ds = w, dr = U w.
pub fn thin_complex(delta: &LaurentPoly, sigma: i64) -> Result<CfkComplex> {
    let fail = |why: String| Err(Error::NotRealizable(format!("{delta}, sigma {sigma}: {why}")));
    if sigma % 2 != 0 {
        return fail("odd signature".into());
    }
    let half = sigma / 2;
    let delta = match delta.eval_one() {
        1 => delta.clone(),
        -1 => delta.scale(-1),
        v => return fail(format!("value {v} at t = 1")),
    };
    if !delta.is_symmetric() {
        return fail("not symmetric".into());
    }
    let tau = -half;
    // diagonal-normalized coefficients
    let mut e: BTreeMap<i64, i64> = BTreeMap::new();
    for (a, c) in delta.terms() {
        let sign = if (a + half).rem_euclid(2) == 0 { 1 } else { -1 };
        if c * sign < 0 {
            return fail(format!("coefficient of t^{a} has the wrong sign for this diagonal"));
        }
        e.insert(a, c.abs());
    }
    let base = if tau == 0 {
        CfkComplex::unknot()
    } else {
        let t = staircase_complex(&torus_delta(2, 2 * tau.unsigned_abs() as u32 + 1))?;
        if tau > 0 {
            t
        } else {
            mirror_dual(&t)?
        }
    };
    for g in &base.generators {
        let slot = e.entry(g.alexander).or_insert(0);
        *slot -= 1;
    }
    // residual r_a = n_{a-1} + 2 n_a + n_{a+1}, solved from the top down
    let Some((&lo, _)) = e.iter().next() else { return Ok(base) };
    let hi = *e.keys().next_back().expect("nonempty");
    let mut n: BTreeMap<i64, i64> = BTreeMap::new();
    let get = |n: &BTreeMap<i64, i64>, a: i64| n.get(&a).copied().unwrap_or(0);
    for a in (lo..=hi).rev() {
        let r = e.get(&a).copied().unwrap_or(0);
        let v = r - 2 * get(&n, a) - get(&n, a + 1);
        if v < 0 {
            return fail(format!("negative box count below grading {a}"));
        }
        if v > 0 {
            n.insert(a - 1, v);
        }
    }
    // every box centre must lie strictly inside [lo, hi]
    if n.keys().any(|&b| b <= lo) {
        return fail("residual left below the lowest grading".into());
    }
    let mut c = base;
    for (&b, &count) in &n {
        let m = b + half;
        for j in 0..count {
            let nm = |x: &str| format!("{x}{b}_{j}");
            c.generators.push(gen(nm("p"), m, b));
            c.generators.push(gen(nm("s"), m + 1, b + 1));
            c.generators.push(gen(nm("r"), m - 1, b - 1));
            c.generators.push(gen(nm("w"), m, b));
            c.differential.push(term(&nm("p"), &nm("r"), 0));
            c.differential.push(term(&nm("p"), &nm("s"), 1));
            c.differential.push(term(&nm("s"), &nm("w"), 0));
            c.differential.push(term(&nm("r"), &nm("w"), 1));
        }
    }
    Ok(c)
}

/// Model for the rank-3 group with generators a(0, i), b(1 - 2i, 0),
/// c(-2i, -i) and db = U^i a + c.
pub fn rank3_model(i: u32) -> CfkComplex {
    let i64_ = i as i64;
    CfkComplex {
        generators: vec![
            gen("a".into(), 0, i64_),
            gen("b".into(), 1 - 2 * i64_, 0),
            gen("c".into(), -2 * i64_, -i64_),
        ],
        differential: vec![term("b", "a", i), term("b", "c", 0)],
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Arrow {
    TopMiddle,
    MiddleBottom,
    TopBottom,
}

/// Symmetric rank-3 groups with top grading i (1 <= i <= g_max) carrying a
/// canceling differential and not ruled out by the obstruction (applied to
/// the group or to its mirror, whichever has tau equal to the top grading).
pub fn rank3_enumerate(g_max: i64) -> Vec<BigradedGroup> {
    if g_max < 1 {
        return Vec::new();
    }
    let per_i: Vec<Vec<BigradedGroup>> = (1..=g_max)
        .into_par_iter()
        .map(|i| {
            let mut found = Vec::new();
            // the pair (m1, i), (m1 - 2i, -i) and a self-symmetric (m0, 0)
            for m1 in -2 * i - 2..=2 * i + 2 {
                for m0 in -2 * i - 2..=2 * i + 2 {
                    for arrow in [Arrow::TopMiddle, Arrow::MiddleBottom, Arrow::TopBottom] {
                        if let Some(g) = rank3_candidate(i, m1, m0, arrow) {
                            found.push(g);
                        }
                    }
                }
            }
            found
        })
        .collect();
    let mut out: Vec<BigradedGroup> = per_i.into_iter().flatten().collect();
    out.sort_by_key(|g| g.iter().collect::<Vec<_>>());
    out.dedup();
    out
}

fn rank3_candidate(i: i64, m1: i64, m0: i64, arrow: Arrow) -> Option<BigradedGroup> {
    let g = |name: &str, m, a| gen(name.to_string(), m, a);
    let gens = vec![g("t", m1, i), g("m", m0, 0), g("b", m1 - 2 * i, -i)];
    let (from, to) = match arrow {
        Arrow::TopMiddle => ("t", "m"),
        Arrow::MiddleBottom => ("m", "b"),
        Arrow::TopBottom => ("t", "b"),
    };
    let mf = gens.iter().find(|x| x.name == from)?.maslov;
    let mt = gens.iter().find(|x| x.name == to)?.maslov;
    if mt != mf - 1 {
        return None;
    }
    let v = VerticalComplex {
        generators: gens,
        differential: vec![VerticalTerm { from: from.into(), to: to.into() }],
    };
    let h = hat_homology(&v).ok()?;
    if !canceling_check(&h) {
        return None;
    }
    let group = v.group();
    let iu = u32::try_from(i).ok()?;
    // realize as a CFK model and test the obstruction
    let model = rank3_model(iu);
    let report = if group == model.generator_group() {
        obstruction_check(&model).ok()?
    } else {
        let mirrored = mirror_dual(&model).ok()?;
        if group != mirrored.generator_group() {
            // a canceling rank-3 pattern outside the two families
            return Some(group);
        }
        obstruction_check_mirror(&mirrored).ok()?
    };
    (!report.obstructed).then_some(group)
}
