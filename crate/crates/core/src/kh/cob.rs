//! Dotted cobordisms between crossingless matchings, over F2[h] with
//! x^2 = h x.
//!
//! A morphism M1 -> M2 is a sum of disk collections: one disk per circle of
//! M1 ∪ M2, each disk dotted or not, times a power of h. Circles are indexed
//! by their least boundary point.

/// Partner of each boundary point.
pub(crate) type Matching = Vec<u8>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Term {
    pub k: u32,
    pub mask: u64,
}

pub(crate) const IDENTITY: Term = Term { k: 0, mask: 0 };

/// Sorted list of terms with coefficients in F2.
pub(crate) type Morph = Vec<Term>;

/// Sorts and cancels pairs.
pub(crate) fn normalize(mut v: Vec<Term>) -> Morph {
    v.sort_unstable();
    let mut out: Vec<Term> = Vec::with_capacity(v.len());
    for t in v {
        if out.last() == Some(&t) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}

/// Sum of two normalized morphisms.
pub(crate) fn add(a: &[Term], b: &[Term]) -> Morph {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Circle id of every point of `a ∪ b`, ids ordered by least point.
pub(crate) fn circles(a: &[u8], b: &[u8]) -> (Vec<u8>, usize) {
    let n = a.len();
    let mut id = vec![u8::MAX; n];
    let mut c = 0u8;
    for s in 0..n {
        if id[s] != u8::MAX {
            continue;
        }
        let mut p = s;
        loop {
            id[p] = c;
            let q = a[p] as usize;
            id[q] = c;
            p = b[q] as usize;
            if p == s {
                break;
            }
        }
        c += 1;
    }
    (id, c as usize)
}

struct Comp {
    chi: i32,
    circles: Vec<u8>,
    a_mask: u64,
    b_mask: u64,
}

/// Two families of disks glued along intervals, with the circles of the
/// resulting boundary.
pub(crate) struct Glue {
    comps: Vec<Comp>,
}

impl Glue {
    /// `glues` pair piece indices (A pieces first, then B); `reps[c]` is a
    /// piece touching output circle `c`.
    pub(crate) fn new(n_a: usize, n_b: usize, glues: &[(usize, usize)], reps: &[usize]) -> Glue {
        let n = n_a + n_b;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(x, y) in glues {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx] = ry;
        }
        let mut comp_of = vec![usize::MAX; n];
        let mut comps: Vec<Comp> = Vec::new();
        for piece in 0..n {
            let r = find(&mut parent, piece);
            if comp_of[r] == usize::MAX {
                comp_of[r] = comps.len();
                comps.push(Comp { chi: 0, circles: Vec::new(), a_mask: 0, b_mask: 0 });
            }
            let c = &mut comps[comp_of[r]];
            c.chi += 1;
            if piece < n_a {
                c.a_mask |= 1 << piece;
            } else {
                c.b_mask |= 1 << (piece - n_a);
            }
        }
        for &(x, _) in glues {
            let r = find(&mut parent, x);
            comps[comp_of[r]].chi -= 1;
        }
        for (circle, &piece) in reps.iter().enumerate() {
            let r = find(&mut parent, piece);
            comps[comp_of[r]].circles.push(circle as u8);
        }
        Glue { comps }
    }

    /// Evaluates the glued surface of `ta` and `tb`, appending its disk
    /// decomposition to `out` (unnormalized).
    pub(crate) fn apply(&self, ta: Term, tb: Term, out: &mut Vec<Term>) {
        let mut acc: Vec<Term> = vec![Term { k: ta.k + tb.k, mask: 0 }];
        for c in &self.comps {
            let d = (ta.mask & c.a_mask).count_ones() + (tb.mask & c.b_mask).count_ones();
            let b = c.circles.len() as i32;
            let g2 = 2 - b - c.chi;
            debug_assert!(g2 >= 0 && g2 % 2 == 0, "bad surface: b={b} chi={}", c.chi);
            let g = (g2 / 2) as u32;
            let all: u64 = c.circles.iter().fold(0, |m, &i| m | 1 << i);
            if b == 0 {
                if d == 0 {
                    return;
                }
                for t in acc.iter_mut() {
                    t.k += g + d - 1;
                }
            } else if d >= 1 {
                for t in acc.iter_mut() {
                    t.k += g + d - 1;
                    t.mask |= all;
                }
            } else {
                // iterated comultiplication of 1: every proper subset dotted
                let mut next = Vec::with_capacity(acc.len() << b);
                for sub in 0..(1u32 << b) - 1 {
                    let mut m = 0u64;
                    for (bit, &circle) in c.circles.iter().enumerate() {
                        if sub >> bit & 1 == 1 {
                            m |= 1 << circle;
                        }
                    }
                    let extra = g + b as u32 - 1 - sub.count_ones();
                    for t in &acc {
                        next.push(Term { k: t.k + extra, mask: t.mask | m });
                    }
                }
                acc = next;
            }
        }
        out.extend(acc);
    }
}

/// Glue structure for composing M1 -> M2 -> M3.
pub(crate) fn compose_glue(m1: &[u8], m2: &[u8], m3: &[u8]) -> Glue {
    let (ca, na) = circles(m1, m2);
    let (cb, nb) = circles(m2, m3);
    let (cn, nn) = circles(m1, m3);
    let mut glues = Vec::new();
    for p in 0..m2.len() {
        if p < m2[p] as usize {
            glues.push((ca[p] as usize, na + cb[p] as usize));
        }
    }
    let mut reps = vec![usize::MAX; nn];
    for p in 0..m1.len() {
        if reps[cn[p] as usize] == usize::MAX {
            reps[cn[p] as usize] = ca[p] as usize;
        }
    }
    Glue::new(na, nb, &glues, &reps)
}

/// g ∘ f using a glue built by `compose_glue`.
pub(crate) fn compose(glue: &Glue, f: &[Term], g: &[Term]) -> Morph {
    let mut out = Vec::new();
    for &tf in f {
        for &tg in g {
            glue.apply(tf, tg, &mut out);
        }
    }
    normalize(out)
}

/// Degree check: j2 - j1 must equal this for every term.
#[cfg(test)]
pub(crate) fn term_degree(m1: &[u8], m2: &[u8], t: Term) -> i32 {
    let (_, nc) = circles(m1, m2);
    -(nc as i32 - m1.len() as i32 / 2) + 2 * t.mask.count_ones() as i32 + 2 * t.k as i32
}
