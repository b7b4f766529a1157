//! Maximum-weight matching in general graphs: Edmonds' primal-dual blossom
//! algorithm in the O(n³) formulation popularised by Galil, on integer
//! weights.
//!
//! Edges are `(i, j, w)` with `i != j` and no parallel pairs. With
//! `max_cardinality` the result is a maximum-weight matching among the
//! maximum-cardinality ones. All weights must be even so that dual
//! variables stay integral.

const NONE: usize = usize::MAX;

struct State<'a> {
    edges: &'a [(usize, usize, i64)],
    nvertex: usize,
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,
    label: Vec<u8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Option<Vec<usize>>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<i64>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

/// Python-style indexing with negative offsets.
fn at(list: &[usize], j: isize) -> usize {
    list[j.rem_euclid(list.len() as isize) as usize]
}

impl<'a> State<'a> {
    fn slack(&self, k: usize) -> i64 {
        let (i, j, w) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2 * w
    }

    fn leaves(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![b];
        while let Some(t) = stack.pop() {
            if t < self.nvertex {
                out.push(t);
            } else {
                for &c in self.blossomchilds[t].iter().rev() {
                    stack.push(c);
                }
            }
        }
        out
    }

    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            let leaves = self.leaves(b);
            self.queue.extend(leaves);
        } else if t == 2 {
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != NONE);
            let mb = self.mate[base];
            self.assign_label(self.endpoint[mb], 1, mb ^ 1);
        }
    }

    fn scan_blossom(&mut self, mut v: usize, mut w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            debug_assert_eq!(self.label[b], 1);
            path.push(b);
            self.label[b] = 5;
            if self.labelend[b] == NONE {
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert_eq!(self.label[b], 2);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().expect("blossom slots exhausted");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;
        let mut path = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            path.push(bv);
            endps.push(self.labelend[bv]);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        path.push(bb);
        path.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            path.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        debug_assert_eq!(self.label[bb], 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;
        self.blossomchilds[b] = path.clone();
        self.blossomendps[b] = endps;
        for v in self.leaves(b) {
            if self.label[self.inblossom[v]] == 2 {
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }
        let mut bestedgeto = vec![NONE; 2 * self.nvertex];
        for &bv in &path {
            let nblists: Vec<Vec<usize>> = match self.blossombestedges[bv].take() {
                None => self
                    .leaves(bv)
                    .into_iter()
                    .map(|v| self.neighbend[v].iter().map(|&p| p / 2).collect())
                    .collect(),
                Some(list) => vec![list],
            };
            for nblist in nblists {
                for k in nblist {
                    let (i, j, _) = self.edges[k];
                    let j = if self.inblossom[j] == b { i } else { j };
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.bestedge[bv] = NONE;
        }
        let list: Vec<usize> = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        self.bestedge[b] = NONE;
        for &k in &list {
            if self.bestedge[b] == NONE || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
        self.blossombestedges[b] = Some(list);
    }

    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        let childs = self.blossomchilds[b].clone();
        for &s in &childs {
            self.blossomparent[s] = NONE;
            if s < self.nvertex {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }
        if !endstage && self.label[b] == 2 {
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let len = childs.len() as isize;
            let mut j = childs.iter().position(|&c| c == entrychild).unwrap() as isize;
            let (jstep, endptrick): (isize, usize) = if j & 1 != 0 {
                j -= len;
                (1, 0)
            } else {
                (-1, 1)
            };
            let endps = self.blossomendps[b].clone();
            let mut p = self.labelend[b];
            while j != 0 {
                let q = self.endpoint[p ^ 1];
                self.label[q] = 0;
                let r = self.endpoint[at(&endps, j - endptrick as isize) ^ endptrick ^ 1];
                self.label[r] = 0;
                self.assign_label(self.endpoint[p ^ 1], 2, p);
                self.allowedge[at(&endps, j - endptrick as isize) / 2] = true;
                j += jstep;
                p = at(&endps, j - endptrick as isize) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            let bv = at(&childs, j);
            let q = self.endpoint[p ^ 1];
            self.label[q] = 2;
            self.label[bv] = 2;
            self.labelend[q] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            j += jstep;
            while at(&childs, j) != entrychild {
                let bv = at(&childs, j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let leaves = self.leaves(bv);
                let mut found = NONE;
                for &v in &leaves {
                    found = v;
                    if self.label[v] != 0 {
                        break;
                    }
                }
                if found != NONE && self.label[found] != 0 {
                    let v = found;
                    debug_assert_eq!(self.label[v], 2);
                    debug_assert_eq!(self.inblossom[v], bv);
                    self.label[v] = 0;
                    let mb = self.mate[self.blossombase[bv]];
                    self.label[self.endpoint[mb]] = 0;
                    self.assign_label(v, 2, self.labelend[v]);
                }
                j += jstep;
            }
        }
        self.label[b] = u8::MAX;
        self.labelend[b] = NONE;
        self.blossomchilds[b] = Vec::new();
        self.blossomendps[b] = Vec::new();
        self.blossombase[b] = NONE;
        self.blossombestedges[b] = None;
        self.bestedge[b] = NONE;
        self.unusedblossoms.push(b);
    }

    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.nvertex {
            self.augment_blossom(t, v);
        }
        let len = self.blossomchilds[b].len() as isize;
        let i = self.blossomchilds[b].iter().position(|&c| c == t).unwrap() as isize;
        let mut j = i;
        let (jstep, endptrick): (isize, usize) = if i & 1 != 0 {
            j -= len;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            let p = at(&self.blossomendps[b], j - endptrick as isize) ^ endptrick;
            if t >= self.nvertex {
                self.augment_blossom(t, self.endpoint[p]);
            }
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            if t >= self.nvertex {
                self.augment_blossom(t, self.endpoint[p ^ 1]);
            }
            let (a, c) = (self.endpoint[p], self.endpoint[p ^ 1]);
            self.mate[a] = p ^ 1;
            self.mate[c] = p;
        }
        let i = i as usize;
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert_eq!(self.blossombase[b], v);
    }

    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)] {
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], 1);
                if bs >= self.nvertex {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], 2);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert_eq!(self.blossombase[bt], t);
                if bt >= self.nvertex {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }
}

/// Returns `mate[v]`, the partner of `v` or `None`.
pub(crate) fn max_weight_matching(
    nvertex: usize,
    edges: &[(usize, usize, i64)],
    max_cardinality: bool,
) -> Vec<Option<usize>> {
    if edges.is_empty() {
        return vec![None; nvertex];
    }
    debug_assert!(edges.iter().all(|&(i, j, w)| i != j && i < nvertex && j < nvertex && w % 2 == 0));
    let nedge = edges.len();
    let maxweight = edges.iter().map(|e| e.2).max().unwrap().max(0);
    let endpoint: Vec<usize> = (0..2 * nedge).map(|p| if p % 2 == 0 { edges[p / 2].0 } else { edges[p / 2].1 }).collect();
    let mut neighbend = vec![Vec::new(); nvertex];
    for (k, &(i, j, _)) in edges.iter().enumerate() {
        neighbend[i].push(2 * k + 1);
        neighbend[j].push(2 * k);
    }
    let mut st = State {
        edges,
        nvertex,
        endpoint,
        neighbend,
        mate: vec![NONE; nvertex],
        label: vec![0; 2 * nvertex],
        labelend: vec![NONE; 2 * nvertex],
        inblossom: (0..nvertex).collect(),
        blossomparent: vec![NONE; 2 * nvertex],
        blossomchilds: vec![Vec::new(); 2 * nvertex],
        blossombase: (0..nvertex).chain(std::iter::repeat_n(NONE, nvertex)).collect(),
        blossomendps: vec![Vec::new(); 2 * nvertex],
        bestedge: vec![NONE; 2 * nvertex],
        blossombestedges: vec![None; 2 * nvertex],
        unusedblossoms: (nvertex..2 * nvertex).collect(),
        dualvar: std::iter::repeat_n(maxweight, nvertex).chain(std::iter::repeat_n(0, nvertex)).collect(),
        allowedge: vec![false; nedge],
        queue: Vec::new(),
    };

    for _ in 0..nvertex {
        st.label.fill(0);
        st.bestedge.fill(NONE);
        for b in nvertex..2 * nvertex {
            st.blossombestedges[b] = None;
        }
        st.allowedge.fill(false);
        st.queue.clear();
        for v in 0..nvertex {
            if st.mate[v] == NONE && st.label[st.inblossom[v]] == 0 {
                st.assign_label(v, 1, NONE);
            }
        }
        let mut augmented = false;
        loop {
            while let Some(v) = st.queue.pop() {
                if augmented {
                    break;
                }
                debug_assert_eq!(st.label[st.inblossom[v]], 1);
                let nb = st.neighbend[v].clone();
                for p in nb {
                    let k = p / 2;
                    let w = st.endpoint[p];
                    if st.inblossom[v] == st.inblossom[w] {
                        continue;
                    }
                    let mut kslack = 0;
                    if !st.allowedge[k] {
                        kslack = st.slack(k);
                        if kslack <= 0 {
                            st.allowedge[k] = true;
                        }
                    }
                    if st.allowedge[k] {
                        if st.label[st.inblossom[w]] == 0 {
                            st.assign_label(w, 2, p ^ 1);
                        } else if st.label[st.inblossom[w]] == 1 {
                            let base = st.scan_blossom(v, w);
                            if base != NONE {
                                st.add_blossom(base, k);
                            } else {
                                st.augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if st.label[w] == 0 {
                            debug_assert_eq!(st.label[st.inblossom[w]], 2);
                            st.label[w] = 2;
                            st.labelend[w] = p ^ 1;
                        }
                    } else if st.label[st.inblossom[w]] == 1 {
                        let b = st.inblossom[v];
                        if st.bestedge[b] == NONE || kslack < st.slack(st.bestedge[b]) {
                            st.bestedge[b] = k;
                        }
                    } else if st.label[w] == 0
                        && (st.bestedge[w] == NONE || kslack < st.slack(st.bestedge[w]))
                    {
                        st.bestedge[w] = k;
                    }
                }
                if augmented {
                    break;
                }
            }
            if augmented {
                break;
            }

            let mut deltatype = -1i32;
            let mut delta = 0i64;
            let mut deltaedge = NONE;
            let mut deltablossom = NONE;
            if !max_cardinality {
                deltatype = 1;
                delta = *st.dualvar[..nvertex].iter().min().unwrap();
            }
            for v in 0..nvertex {
                if st.label[st.inblossom[v]] == 0 && st.bestedge[v] != NONE {
                    let d = st.slack(st.bestedge[v]);
                    if deltatype == -1 || d < delta {
                        delta = d;
                        deltatype = 2;
                        deltaedge = st.bestedge[v];
                    }
                }
            }
            for b in 0..2 * nvertex {
                if st.blossomparent[b] == NONE && st.label[b] == 1 && st.bestedge[b] != NONE {
                    let kslack = st.slack(st.bestedge[b]);
                    debug_assert_eq!(kslack % 2, 0);
                    let d = kslack / 2;
                    if deltatype == -1 || d < delta {
                        delta = d;
                        deltatype = 3;
                        deltaedge = st.bestedge[b];
                    }
                }
            }
            for b in nvertex..2 * nvertex {
                if st.blossombase[b] != NONE
                    && st.blossomparent[b] == NONE
                    && st.label[b] == 2
                    && (deltatype == -1 || st.dualvar[b] < delta)
                {
                    delta = st.dualvar[b];
                    deltatype = 4;
                    deltablossom = b;
                }
            }
            if deltatype == -1 {
                debug_assert!(max_cardinality);
                deltatype = 1;
                delta = (*st.dualvar[..nvertex].iter().min().unwrap()).max(0);
            }
            for v in 0..nvertex {
                match st.label[st.inblossom[v]] {
                    1 => st.dualvar[v] -= delta,
                    2 => st.dualvar[v] += delta,
                    _ => {}
                }
            }
            for b in nvertex..2 * nvertex {
                if st.blossombase[b] != NONE && st.blossomparent[b] == NONE {
                    match st.label[b] {
                        1 => st.dualvar[b] += delta,
                        2 => st.dualvar[b] -= delta,
                        _ => {}
                    }
                }
            }
            match deltatype {
                1 => break,
                2 => {
                    st.allowedge[deltaedge] = true;
                    let (mut i, j, _) = edges[deltaedge];
                    if st.label[st.inblossom[i]] == 0 {
                        i = j;
                    }
                    debug_assert_eq!(st.label[st.inblossom[i]], 1);
                    st.queue.push(i);
                }
                3 => {
                    st.allowedge[deltaedge] = true;
                    let (i, _, _) = edges[deltaedge];
                    debug_assert_eq!(st.label[st.inblossom[i]], 1);
                    st.queue.push(i);
                }
                _ => st.expand_blossom(deltablossom, false),
            }
        }
        if !augmented {
            break;
        }
        for b in nvertex..2 * nvertex {
            if st.blossomparent[b] == NONE
                && st.blossombase[b] != NONE
                && st.label[b] == 1
                && st.dualvar[b] == 0
            {
                st.expand_blossom(b, true);
            }
        }
    }
    st.mate.iter().map(|&p| if p == NONE { None } else { Some(st.endpoint[p]) }).collect()
}
