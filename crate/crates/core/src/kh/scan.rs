//! Scanning a diagram piece by piece, delooping circles and cancelling
//! isomorphisms after each step.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use super::cob::{add, circles, compose, compose_glue, normalize, Glue, Matching, Morph, Term, IDENTITY};

/// (from, to, morphism) between surviving objects.
pub(crate) type Arrow = (usize, usize, Morph);

/// A tangle with a small complex: crossing, basepoint dot or plain vertex.
#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub labels: Vec<u32>,
    /// (matching over slots, homological degree, quantum shift)
    pub objects: Vec<(Matching, i32, i32)>,
    pub arrows: Vec<(usize, usize, Morph)>,
}

impl Piece {
    /// `[a, b, c, d]`: 0-smoothing joins (a,b),(c,d); 1-smoothing (a,d),(b,c).
    pub(crate) fn crossing(labels: [u32; 4]) -> Piece {
        Piece {
            labels: labels.to_vec(),
            objects: vec![(vec![1, 0, 3, 2], 0, 0), (vec![3, 2, 1, 0], 1, 1)],
            arrows: vec![(0, 1, vec![IDENTITY])],
        }
    }

    pub(crate) fn vertex(a: u32, b: u32) -> Piece {
        Piece { labels: vec![a, b], objects: vec![(vec![1, 0], 0, 0)], arrows: vec![] }
    }

    /// Cone of multiplication by x on a strand.
    pub(crate) fn dot(a: u32, b: u32) -> Piece {
        Piece {
            labels: vec![a, b],
            objects: vec![(vec![1, 0], 0, 0), (vec![1, 0], 1, 2)],
            arrows: vec![(0, 1, vec![Term { k: 0, mask: 1 }])],
        }
    }
}

#[derive(Clone, Debug)]
struct Obj {
    mat: u32,
    h: i32,
    j: i32,
    alive: bool,
}

/// Complex of delooped crossingless matchings on the current boundary.
pub(crate) struct Complex {
    labels: Vec<u32>,
    mats: Vec<Matching>,
    mat_ix: HashMap<Matching, u32>,
    objs: Vec<Obj>,
    out: Vec<BTreeMap<u32, Morph>>,
    inc: Vec<BTreeSet<u32>>,
    glue_cache: HashMap<(u32, u32, u32), Rc<Glue>>,
}

/// Result of gluing a matching with a piece matching.
struct Merged {
    mat: Matching,
    /// loop index of every node (T points, then slots), if on a loop
    loop_of: Vec<Option<u8>>,
    loops: usize,
}

/// How the boundary of the complex meets a piece.
struct Attach {
    nt: usize,
    ns: usize,
    /// glue partner of every node
    glue: Vec<Option<usize>>,
    /// index on the new boundary of every free node
    newidx: Vec<Option<usize>>,
    new_labels: Vec<u32>,
}

impl Attach {
    fn new(labels: &[u32], piece: &Piece) -> Attach {
        let nt = labels.len();
        let ns = piece.labels.len();
        let mut glue = vec![None; nt + ns];
        let pos: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        for (s, &l) in piece.labels.iter().enumerate() {
            if let Some(&t) = pos.get(&l) {
                glue[t] = Some(nt + s);
                glue[nt + s] = Some(t);
            } else if let Some(s2) = (0..ns).find(|&s2| s2 != s && piece.labels[s2] == l) {
                glue[nt + s] = Some(nt + s2);
            }
        }
        let mut free: Vec<(u32, usize)> = Vec::new();
        for (t, &l) in labels.iter().enumerate() {
            if glue[t].is_none() {
                free.push((l, t));
            }
        }
        for (s, &l) in piece.labels.iter().enumerate() {
            if glue[nt + s].is_none() {
                free.push((l, nt + s));
            }
        }
        free.sort_unstable();
        let mut newidx = vec![None; nt + ns];
        for (i, &(_, node)) in free.iter().enumerate() {
            newidx[node] = Some(i);
        }
        Attach { nt, ns, glue, newidx, new_labels: free.iter().map(|&(l, _)| l).collect() }
    }

    fn partner(&self, o: &[u8], p: &[u8], node: usize) -> usize {
        if node < self.nt {
            o[node] as usize
        } else {
            self.nt + p[node - self.nt] as usize
        }
    }

    fn merge(&self, o: &[u8], p: &[u8]) -> Merged {
        let n = self.nt + self.ns;
        let mut seen = vec![false; n];
        let mut mat = vec![0u8; self.new_labels.len()];
        for start in 0..n {
            let Some(i0) = self.newidx[start] else { continue };
            if seen[start] {
                continue;
            }
            let mut cur = start;
            loop {
                seen[cur] = true;
                let m = self.partner(o, p, cur);
                seen[m] = true;
                if let Some(i1) = self.newidx[m] {
                    mat[i0] = i1 as u8;
                    mat[i1] = i0 as u8;
                    break;
                }
                cur = self.glue[m].expect("inner node is glued");
            }
        }
        let mut loop_of = vec![None; n];
        let mut loops = 0u8;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cur = start;
            loop {
                seen[cur] = true;
                loop_of[cur] = Some(loops);
                let m = self.partner(o, p, cur);
                seen[m] = true;
                loop_of[m] = Some(loops);
                cur = self.glue[m].expect("loop node is glued");
                if cur == start {
                    break;
                }
            }
            loops += 1;
        }
        Merged { mat, loop_of, loops: loops as usize }
    }
}

/// Circle structure of a tensor-product arrow after gluing.
struct TensorGlue {
    glue: Glue,
    /// for every output circle: Ok(new circle index) or Err((is_target, loop))
    kind: Vec<std::result::Result<u8, (bool, u8)>>,
}

fn tensor_glue(at: &Attach, o1: &[u8], o2: &[u8], p1: &[u8], p2: &[u8], m1: &Merged, m2: &Merged) -> TensorGlue {
    let (nt, ns) = (at.nt, at.ns);
    let n = nt + ns;
    let (ca, na) = circles(o1, o2);
    let (cb, nb) = circles(p1, p2);
    let piece = |node: usize| if node < nt { ca[node] as usize } else { na + cb[node - nt] as usize };
    let mut glues = Vec::new();
    for node in 0..n {
        if let Some(g) = at.glue[node] {
            if node < g {
                glues.push((piece(node), piece(g)));
            }
        }
    }
    // output circles: top layer 0..n, bottom n..2n
    let mut parent: Vec<usize> = (0..2 * n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        p[ra] = rb;
    };
    for node in 0..n {
        union(&mut parent, node, at.partner(o1, p1, node));
        union(&mut parent, n + node, n + at.partner(o2, p2, node));
        if let Some(g) = at.glue[node] {
            union(&mut parent, node, g);
            union(&mut parent, n + node, n + g);
        }
        if at.newidx[node].is_some() {
            union(&mut parent, node, n + node);
        }
    }
    let (cn, _) = circles(&m1.mat, &m2.mat);
    let mut root_ix: HashMap<usize, usize> = HashMap::new();
    let mut reps = Vec::new();
    let mut kind = Vec::new();
    // circles through the new boundary first, then loops
    for node in 0..n {
        let Some(i) = at.newidx[node] else { continue };
        let r = find(&mut parent, node);
        if let std::collections::hash_map::Entry::Vacant(e) = root_ix.entry(r) {
            e.insert(reps.len());
            reps.push(piece(node));
            kind.push(Ok(cn[i]));
        }
    }
    for layer in 0..2 {
        for node in 0..n {
            let r = find(&mut parent, layer * n + node);
            if root_ix.contains_key(&r) {
                continue;
            }
            root_ix.insert(r, reps.len());
            reps.push(piece(node));
            kind.push(if layer == 0 {
                Err((false, m1.loop_of[node].expect("top loop")))
            } else {
                Err((true, m2.loop_of[node].expect("bottom loop")))
            });
        }
    }
    TensorGlue { glue: Glue::new(na, nb, &glues, &reps), kind }
}

impl Complex {
    /// Empty tangle: one object, the empty matching.
    pub(crate) fn new() -> Complex {
        let mut c = Complex {
            labels: Vec::new(),
            mats: Vec::new(),
            mat_ix: HashMap::new(),
            objs: Vec::new(),
            out: Vec::new(),
            inc: Vec::new(),
            glue_cache: HashMap::new(),
        };
        let m = c.intern(Vec::new());
        c.push_obj(m, 0, 0);
        c
    }

    fn intern(&mut self, m: Matching) -> u32 {
        if let Some(&i) = self.mat_ix.get(&m) {
            return i;
        }
        let i = self.mats.len() as u32;
        self.mats.push(m.clone());
        self.mat_ix.insert(m, i);
        i
    }

    fn push_obj(&mut self, mat: u32, h: i32, j: i32) -> u32 {
        self.objs.push(Obj { mat, h, j, alive: true });
        self.out.push(BTreeMap::new());
        self.inc.push(BTreeSet::new());
        self.objs.len() as u32 - 1
    }

    fn add_arrow(&mut self, from: u32, to: u32, m: &[Term]) {
        if m.is_empty() {
            return;
        }
        let slot = self.out[from as usize].entry(to).or_default();
        let sum = add(slot, m);
        if sum.is_empty() {
            self.out[from as usize].remove(&to);
            self.inc[to as usize].remove(&from);
        } else {
            *slot = sum;
            self.inc[to as usize].insert(from);
        }
    }

    pub(crate) fn boundary(&self) -> &[u32] {
        &self.labels
    }

    /// Tensor with a piece along the shared labels, then deloop and cancel.
    pub(crate) fn attach(&self, piece: &Piece) -> Complex {
        let at = Attach::new(&self.labels, piece);
        let mut next = Complex {
            labels: at.new_labels.clone(),
            mats: Vec::new(),
            mat_ix: HashMap::new(),
            objs: Vec::new(),
            out: Vec::new(),
            inc: Vec::new(),
            glue_cache: HashMap::new(),
        };
        let alive: Vec<u32> = (0..self.objs.len() as u32).filter(|&i| self.objs[i as usize].alive).collect();
        let mut merged: HashMap<(u32, usize), Rc<Merged>> = HashMap::new();
        // first new object index of every (object, piece object) pair
        let mut base: HashMap<(u32, usize), u32> = HashMap::new();
        for &o in &alive {
            let obj = &self.objs[o as usize];
            for (pi, (pm, ph, pj)) in piece.objects.iter().enumerate() {
                let mg = merged
                    .entry((obj.mat, pi))
                    .or_insert_with(|| Rc::new(at.merge(&self.mats[obj.mat as usize], pm)))
                    .clone();
                let mat = next.intern(mg.mat.clone());
                let first = next.objs.len() as u32;
                for lambda in 0..1u32 << mg.loops {
                    let labels_j: i32 = (0..mg.loops).map(|l| if lambda >> l & 1 == 1 { -1 } else { 1 }).sum();
                    next.push_obj(mat, obj.h + ph, obj.j + pj + labels_j);
                }
                base.insert((o, pi), first);
            }
        }
        let mut tg_cache: HashMap<(u32, u32, usize, usize), Rc<TensorGlue>> = HashMap::new();
        let emit = |next: &mut Complex,
                        tg_cache: &mut HashMap<(u32, u32, usize, usize), Rc<TensorGlue>>,
                        (o1, o2, p1, p2): (u32, u32, usize, usize),
                        fa: &[Term],
                        fb: &[Term]| {
            let (mo1, mo2) = (self.objs[o1 as usize].mat, self.objs[o2 as usize].mat);
            let m1 = merged[&(mo1, p1)].clone();
            let m2 = merged[&(mo2, p2)].clone();
            let tg = tg_cache
                .entry((mo1, mo2, p1, p2))
                .or_insert_with(|| {
                    Rc::new(tensor_glue(
                        &at,
                        &self.mats[mo1 as usize],
                        &self.mats[mo2 as usize],
                        &piece.objects[p1].0,
                        &piece.objects[p2].0,
                        &m1,
                        &m2,
                    ))
                })
                .clone();
            let mut terms = Vec::new();
            for &ta in fa {
                for &tb in fb {
                    tg.glue.apply(ta, tb, &mut terms);
                }
            }
            let terms = normalize(terms);
            let (b1, b2) = (base[&(o1, p1)], base[&(o2, p2)]);
            // deloop: collect arrows per (source label, target label)
            let mut acc: BTreeMap<(u32, u32), Vec<Term>> = BTreeMap::new();
            for t in terms {
                let mut lt = 0u32;
                let mut mask = 0u64;
                let mut src: Vec<(u32, u32)> = vec![(0, t.k)];
                for (c, kd) in tg.kind.iter().enumerate() {
                    let dotted = t.mask >> c & 1 == 1;
                    match *kd {
                        Ok(i) => {
                            if dotted {
                                mask |= 1 << i;
                            }
                        }
                        Err((true, l)) => {
                            if dotted {
                                lt |= 1 << l;
                            }
                        }
                        Err((false, l)) => {
                            if dotted {
                                // label 1: factor 1; label x: factor h
                                let mut more = Vec::with_capacity(src.len() * 2);
                                for &(ls, k) in &src {
                                    more.push((ls, k));
                                    more.push((ls | 1 << l, k + 1));
                                }
                                src = more;
                            } else {
                                for s in src.iter_mut() {
                                    s.0 |= 1 << l;
                                }
                            }
                        }
                    }
                }
                for (ls, k) in src {
                    acc.entry((ls, lt)).or_default().push(Term { k, mask });
                }
            }
            for ((ls, lt), v) in acc {
                next.add_arrow(b1 + ls, b2 + lt, &normalize(v));
            }
        };
        for &o1 in &alive {
            for (&o2, f) in &self.out[o1 as usize] {
                for pi in 0..piece.objects.len() {
                    emit(&mut next, &mut tg_cache, (o1, o2, pi, pi), f, &[IDENTITY]);
                }
            }
        }
        for &o in &alive {
            for (p1, p2, g) in &piece.arrows {
                emit(&mut next, &mut tg_cache, (o, o, *p1, *p2), &[IDENTITY], g);
            }
        }
        next.cancel_all();
        next
    }

    fn is_iso(&self, x: u32, y: u32) -> bool {
        let (a, b) = (&self.objs[x as usize], &self.objs[y as usize]);
        a.mat == b.mat && a.j == b.j && self.out[x as usize].get(&y).map(|m| m.as_slice()) == Some(&[IDENTITY])
    }

    fn glue_for(&mut self, a: u32, b: u32, c: u32) -> Rc<Glue> {
        if let Some(g) = self.glue_cache.get(&(a, b, c)) {
            return g.clone();
        }
        let g = Rc::new(compose_glue(&self.mats[a as usize], &self.mats[b as usize], &self.mats[c as usize]));
        self.glue_cache.insert((a, b, c), g.clone());
        g
    }

    /// Gaussian elimination of the isomorphism x -> y.
    fn eliminate(&mut self, x: u32, y: u32) {
        let ins: Vec<(u32, Morph)> = self.inc[y as usize]
            .iter()
            .filter(|&&a| a != x)
            .map(|&a| (a, self.out[a as usize][&y].clone()))
            .collect();
        let outs: Vec<(u32, Morph)> =
            self.out[x as usize].iter().filter(|(&b, _)| b != y).map(|(&b, m)| (b, m.clone())).collect();
        for v in [x, y] {
            let succ: Vec<u32> = self.out[v as usize].keys().copied().collect();
            for s in succ {
                self.inc[s as usize].remove(&v);
            }
            let pred: Vec<u32> = self.inc[v as usize].iter().copied().collect();
            for p in pred {
                self.out[p as usize].remove(&v);
            }
            self.out[v as usize].clear();
            self.inc[v as usize].clear();
            self.objs[v as usize].alive = false;
        }
        let my = self.objs[y as usize].mat;
        for (a, dya) in &ins {
            let ma = self.objs[*a as usize].mat;
            for (b, dbx) in &outs {
                let mb = self.objs[*b as usize].mat;
                let glue = self.glue_for(ma, my, mb);
                let c = compose(&glue, dya, dbx);
                self.add_arrow(*a, *b, &c);
            }
        }
    }

    fn cancel_all(&mut self) {
        loop {
            let mut changed = false;
            for x in 0..self.objs.len() as u32 {
                while self.objs[x as usize].alive {
                    let y = self.out[x as usize].keys().copied().find(|&y| self.is_iso(x, y));
                    match y {
                        Some(y) => {
                            self.eliminate(x, y);
                            changed = true;
                        }
                        None => break,
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.objs.iter().filter(|o| o.alive).count()
    }

    /// Objects (h, j) and arrows (from, to, morph) of the surviving complex,
    /// renumbered densely. Requires the boundary to be a single arc or empty.
    pub(crate) fn export(&self) -> (Vec<(i32, i32)>, Vec<Arrow>) {
        let alive: Vec<usize> = (0..self.objs.len()).filter(|&i| self.objs[i].alive).collect();
        let ix: HashMap<usize, usize> = alive.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let gens = alive.iter().map(|&i| (self.objs[i].h, self.objs[i].j)).collect();
        let mut arrows = Vec::new();
        for &i in &alive {
            for (&t, m) in &self.out[i] {
                arrows.push((ix[&i], ix[&(t as usize)], m.clone()));
            }
        }
        (gens, arrows)
    }

    /// Checks homogeneity of every arrow and d^2 = 0.
    #[cfg(test)]
    pub(crate) fn check(&mut self) -> bool {
        use super::cob::term_degree;
        for x in 0..self.objs.len() {
            if !self.objs[x].alive {
                continue;
            }
            for (&y, m) in &self.out[x] {
                let (a, b) = (&self.objs[x], &self.objs[y as usize]);
                if b.h != a.h + 1 {
                    return false;
                }
                for &t in m {
                    if term_degree(&self.mats[a.mat as usize], &self.mats[b.mat as usize], t) != b.j - a.j {
                        return false;
                    }
                }
            }
        }
        for x in 0..self.objs.len() as u32 {
            if !self.objs[x as usize].alive {
                continue;
            }
            let mut two: BTreeMap<u32, Morph> = BTreeMap::new();
            let firsts: Vec<(u32, Morph)> = self.out[x as usize].iter().map(|(&y, m)| (y, m.clone())).collect();
            for (y, f) in firsts {
                let seconds: Vec<(u32, Morph)> =
                    self.out[y as usize].iter().map(|(&z, m)| (z, m.clone())).collect();
                for (z, g) in seconds {
                    let (mx, my, mz) =
                        (self.objs[x as usize].mat, self.objs[y as usize].mat, self.objs[z as usize].mat);
                    let glue = self.glue_for(mx, my, mz);
                    let c = compose(&glue, &f, &g);
                    let e = two.entry(z).or_default();
                    *e = add(e, &c);
                }
            }
            if two.values().any(|m| !m.is_empty()) {
                return false;
            }
        }
        true
    }
}
