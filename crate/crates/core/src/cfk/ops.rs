use std::collections::{BTreeMap, HashSet};

use super::{ensure_valid, CfkComplex, CfkGenerator, CfkTerm};
use crate::error::{Error, Result};

/// Dual complex: gradings negated, arrows reversed, names kept.
pub fn mirror_dual(c: &CfkComplex) -> Result<CfkComplex> {
    ensure_valid(c)?;
    Ok(CfkComplex {
        generators: c
            .generators
            .iter()
            .map(|g| CfkGenerator { name: g.name.clone(), maslov: -g.maslov, alexander: -g.alexander })
            .collect(),
        differential: c
            .differential
            .iter()
            .map(|t| CfkTerm { from: t.to.clone(), to: t.from.clone(), upower: t.upower })
            .collect(),
    })
}

/// Swaps the two filtrations and shifts each generator back into the
/// i = 0 column: x becomes U^{A(x)} x.
pub fn transpose(c: &CfkComplex) -> Result<CfkComplex> {
    ensure_valid(c)?;
    let alex: BTreeMap<&str, i64> =
        c.generators.iter().map(|g| (g.name.as_str(), g.alexander)).collect();
    let generators = c
        .generators
        .iter()
        .map(|g| {
            let m = g.alexander.checked_mul(2).and_then(|x| g.maslov.checked_sub(x));
            m.map(|maslov| CfkGenerator { name: g.name.clone(), maslov, alexander: -g.alexander })
                .ok_or(Error::Overflow("maslov grading"))
        })
        .collect::<Result<Vec<_>>>()?;
    let differential = c
        .differential
        .iter()
        .map(|t| {
            let k = t.upower as i64 + alex[t.from.as_str()] - alex[t.to.as_str()];
            let upower = u32::try_from(k).map_err(|_| Error::Overflow("U power"))?;
            Ok(CfkTerm { from: t.from.clone(), to: t.to.clone(), upower })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CfkComplex { generators, differential })
}

/// Tensor product over GF(2)[U, U^-1]; generator (x, y) is named "(x,y)".
pub fn tensor(c1: &CfkComplex, c2: &CfkComplex) -> Result<CfkComplex> {
    ensure_valid(c1)?;
    ensure_valid(c2)?;
    let pair = |a: &str, b: &str| format!("({a},{b})");
    let mut generators = Vec::with_capacity(c1.len() * c2.len());
    let mut names = HashSet::new();
    for g in &c1.generators {
        for h in &c2.generators {
            let name = pair(&g.name, &h.name);
            if !names.insert(name.clone()) {
                return Err(Error::InvalidComplex(format!("tensor name collision {name}")));
            }
            let maslov = g.maslov.checked_add(h.maslov).ok_or(Error::Overflow("maslov grading"))?;
            let alexander =
                g.alexander.checked_add(h.alexander).ok_or(Error::Overflow("alexander grading"))?;
            generators.push(CfkGenerator { name, maslov, alexander });
        }
    }
    let mut differential = Vec::new();
    for t in &c1.differential {
        for h in &c2.generators {
            differential.push(CfkTerm {
                from: pair(&t.from, &h.name),
                to: pair(&t.to, &h.name),
                upower: t.upower,
            });
        }
    }
    for g in &c1.generators {
        for t in &c2.differential {
            differential.push(CfkTerm {
                from: pair(&g.name, &t.from),
                to: pair(&g.name, &t.to),
                upower: t.upower,
            });
        }
    }
    Ok(CfkComplex { generators, differential })
}
