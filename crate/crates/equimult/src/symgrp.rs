//! Symmetric group combinatorics: permutations, compositions and their block
//! structure, partitions, standard tableaux, Specht modules built directly
//! from polytabloids, and Jordan-type invariants of nilpotent matrices.

use itertools::Itertools;

use crate::poly::{qint, Q};
use crate::qmat::QMat;
use num::{One, Zero};

/// A permutation of `{0, ..., d-1}` stored as the image vector:
/// `images[i]` is where `i` goes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    pub images: Vec<usize>,
}

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm { images: (0..d).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            assert!(x < d && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Perm { images }
    }

    pub fn d(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Adjacent transposition `s_a` swapping `a` and `a+1` (1-based `a`).
    pub fn adjacent(d: usize, a: usize) -> Self {
        assert!(a >= 1 && a < d);
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(a - 1, a);
        Perm { images }
    }

    /// `self` after `other`: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.d(), other.d());
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.d()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let d = self.d();
        let mut n = 0;
        for i in 0..d {
            for j in i + 1..d {
                if self.images[i] > self.images[j] {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// A reduced word `(a_1, ..., a_l)` with `self = s_{a_1} ... s_{a_l}`
    /// (1-based letters), found by bubble sorting the image vector.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) else {
                break;
            };
            v.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    pub fn from_word(d: usize, word: &[usize]) -> Perm {
        let mut p = Perm::identity(d);
        for &a in word {
            p = p.compose(&Perm::adjacent(d, a));
        }
        p
    }

    pub fn cycle_type(&self) -> Partition {
        let d = self.d();
        let mut seen = vec![false; d];
        let mut parts = Vec::new();
        for i in 0..d {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    /// All `d!` permutations.
    pub fn all(d: usize) -> Vec<Perm> {
        (0..d).permutations(d).map(|images| Perm { images }).collect()
    }

    /// A representative with the given cycle type, built from consecutive
    /// cycles.
    pub fn class_rep(mu: &Partition) -> Perm {
        let d = mu.size();
        let mut images: Vec<usize> = (0..d).collect();
        let mut start = 0;
        for &p in &mu.parts {
            for i in 0..p {
                images[start + i] = start + (i + 1) % p;
            }
            start += p;
        }
        Perm { images }
    }

    /// Permutation matrix `M` with `M v = v` permuted: `M[w(i), i] = 1`.
    pub fn matrix(&self) -> QMat {
        let d = self.d();
        let mut m = QMat::zeros(d, d);
        for i in 0..d {
            m[(self.images[i], i)] = Q::one();
        }
        m
    }
}

/// A composition of `d` into `n` nonnegative parts, indexing a block of a
/// partial flag variety. The "annihilated" outcome of a raising or lowering
/// move is `None`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    /// Consecutive index blocks `[start, end)` (0-based) of sizes given by
    /// the parts.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for &p in &self.parts {
            out.push((start, start + p));
            start += p;
        }
        out
    }

    /// Which block the index `i` (0-based) lies in.
    pub fn block_of(&self, i: usize) -> usize {
        let mut start = 0;
        for (b, &p) in self.parts.iter().enumerate() {
            if i < start + p {
                return b;
            }
            start += p;
        }
        panic!("index {} out of range for composition of {}", i, self.size());
    }

    /// Raising move on the `a`-th wall (1-based): move one box from part
    /// `a+1` to part `a`.
    pub fn raise(&self, a: usize) -> Option<Composition> {
        assert!(a >= 1 && a < self.n());
        if self.parts[a] == 0 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[a - 1] += 1;
        parts[a] -= 1;
        Some(Composition { parts })
    }

    /// Lowering move on the `a`-th wall (1-based): move one box from part
    /// `a` to part `a+1`.
    pub fn lower(&self, a: usize) -> Option<Composition> {
        assert!(a >= 1 && a < self.n());
        if self.parts[a - 1] == 0 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[a - 1] -= 1;
        parts[a] += 1;
        Some(Composition { parts })
    }

    /// All compositions of `d` into `n` nonnegative parts.
    pub fn all(d: usize, n: usize) -> Vec<Composition> {
        fn rec(d: usize, n: usize, acc: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 1 {
                acc.push(d);
                out.push(Composition { parts: acc.clone() });
                acc.pop();
                return;
            }
            for k in 0..=d {
                acc.push(k);
                rec(d - k, n - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, n, &mut Vec::new(), &mut out);
        out
    }

    /// All elements of the Young subgroup: permutations preserving every
    /// block.
    pub fn young_subgroup(&self) -> Vec<Perm> {
        let d = self.size();
        let mut elems = vec![Perm::identity(d)];
        for (start, end) in self.blocks() {
            let block: Vec<usize> = (start..end).collect();
            let mut next = Vec::new();
            for assignment in block.iter().copied().permutations(block.len()) {
                for base in &elems {
                    let mut images = base.images.clone();
                    for (pos, &val) in block.iter().zip(&assignment) {
                        images[*pos] = val;
                    }
                    next.push(Perm { images });
                }
            }
            elems = next;
        }
        elems
    }

    /// Minimal-length representatives of the cosets `w S` for this Young
    /// subgroup `S`: images increase along every block.
    pub fn min_coset_reps(&self) -> Vec<Perm> {
        let d = self.size();
        let mut reps = vec![Vec::new()];
        let mut remaining = vec![(0..d).collect::<Vec<usize>>()];
        for &p in &self.parts {
            let mut next_reps = Vec::new();
            let mut next_rem = Vec::new();
            for (rep, rem) in reps.iter().zip(&remaining) {
                for chosen in rem.iter().copied().combinations(p) {
                    let mut r = rep.clone();
                    r.extend(chosen.iter().copied());
                    let left: Vec<usize> =
                        rem.iter().copied().filter(|x| !chosen.contains(x)).collect();
                    next_reps.push(r);
                    next_rem.push(left);
                }
            }
            reps = next_reps;
            remaining = next_rem;
        }
        reps.into_iter().map(Perm::from_images).collect()
    }

    /// The minimal-length representative of `w S`: sort images within each
    /// block.
    pub fn coset_rep(&self, w: &Perm) -> Perm {
        let mut images = w.images.clone();
        for (start, end) in self.blocks() {
            images[start..end].sort();
        }
        Perm { images }
    }

    pub fn young_order(&self) -> usize {
        self.parts.iter().map(|&p| factorial(p)).product()
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// `self` is below `other` in dominance order.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        assert_eq!(self.size(), other.size());
        let mut a = 0usize;
        let mut b = 0usize;
        let rows = self.parts.len().max(other.parts.len());
        for i in 0..rows {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let t = self.transpose();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row).map(|j| (row - j) + (t.parts[j] - i) - 1).collect()
            })
            .collect()
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn num_standard_tableaux(&self) -> usize {
        let hooks: usize = self.hook_lengths().into_iter().flatten().product();
        factorial(self.size()) / hooks
    }

    /// All partitions of `d`, in lexicographically decreasing order.
    pub fn all(d: usize) -> Vec<Partition> {
        fn rec(d: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if d == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            for p in (1..=max.min(d)).rev() {
                acc.push(p);
                rec(d - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, &mut Vec::new(), &mut out);
        out
    }

    /// Order of the centralizer of a permutation with this cycle type.
    pub fn centralizer_order(&self) -> usize {
        let mut mult = std::collections::BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0usize) += 1;
        }
        mult.iter().map(|(&k, &m)| k.pow(m as u32) * factorial(m)).product()
    }

    pub fn render(&self) -> String {
        format!(
            "[{}]",
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// A filling of a Young diagram by `1..d`, one entry per box.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    pub rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_standard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if j + 1 < row.len() && row[j + 1] <= x {
                    return false;
                }
                if i + 1 < self.rows.len() {
                    if let Some(&below) = self.rows[i + 1].get(j) {
                        if below <= x {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Entry-wise relabeling by `w` (entries are 1-based).
    pub fn relabel(&self, w: &Perm) -> StandardTableau {
        StandardTableau {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&x| w.images[x - 1] + 1).collect())
                .collect(),
        }
    }

    /// All standard tableaux of the given shape.
    pub fn all(shape: &Partition) -> Vec<StandardTableau> {
        let d = shape.size();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.parts.len()];
        let mut out = Vec::new();
        fn rec(
            next: usize,
            d: usize,
            shape: &Partition,
            rows: &mut Vec<Vec<usize>>,
            out: &mut Vec<StandardTableau>,
        ) {
            if next > d {
                out.push(StandardTableau { rows: rows.clone() });
                return;
            }
            for i in 0..shape.parts.len() {
                let can = rows[i].len() < shape.parts[i]
                    && (i == 0 || rows[i - 1].len() > rows[i].len());
                if can {
                    rows[i].push(next);
                    rec(next + 1, d, shape, rows, out);
                    rows[i].pop();
                }
            }
        }
        rec(1, d, shape, &mut rows, &mut out);
        out
    }

    pub fn render(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

/// A tabloid: a row filling up to reordering within rows. Canonical form has
/// sorted rows.
fn tabloid_of(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    rows.iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort_unstable();
            r
        })
        .collect()
}

/// The Specht module of shape `lambda`, realized inside the span of tabloids
/// with standard polytabloids as basis. No straightening is performed:
/// coordinates of arbitrary polytabloids are recovered by exact linear
/// algebra.
pub struct SpechtModule {
    pub shape: Partition,
    pub tabloids: Vec<Vec<Vec<usize>>>,
    tabloid_index: std::collections::BTreeMap<Vec<Vec<usize>>, usize>,
    pub standard: Vec<StandardTableau>,
    /// Columns are the standard polytabloids in tabloid coordinates.
    pub basis: QMat,
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Self {
        let d = shape.size();
        let tabloids = enumerate_tabloids(shape, d);
        let tabloid_index: std::collections::BTreeMap<_, _> =
            tabloids.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let standard = StandardTableau::all(shape);
        let mut cols = Vec::new();
        for t in &standard {
            cols.push(polytabloid(t, &tabloid_index, tabloids.len()));
        }
        let basis = QMat::from_columns(tabloids.len(), &cols);
        assert_eq!(basis.rank(), standard.len(), "standard polytabloids are independent");
        SpechtModule { shape: shape.clone(), tabloids, tabloid_index, standard, basis }
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    /// Matrix of `w` acting on the standard polytabloid basis: column `j`
    /// holds the coordinates of `w . e_{t_j}`.
    pub fn action(&self, w: &Perm) -> QMat {
        let mut cols = Vec::new();
        for t in &self.standard {
            let wt = t.relabel(w);
            let v = polytabloid(&wt, &self.tabloid_index, self.tabloids.len());
            let c = self.basis.solve(&v).expect("polytabloid lies in the Specht span");
            cols.push(c);
        }
        QMat::from_columns(self.dim(), &cols)
    }

    pub fn character(&self, mu: &Partition) -> Q {
        self.action(&Perm::class_rep(mu)).trace()
    }
}

fn enumerate_tabloids(shape: &Partition, d: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    fn rec(
        parts: &[usize],
        remaining: Vec<usize>,
        acc: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if parts.is_empty() {
            out.push(acc.clone());
            return;
        }
        for chosen in remaining.iter().copied().combinations(parts[0]) {
            let left: Vec<usize> =
                remaining.iter().copied().filter(|x| !chosen.contains(x)).collect();
            acc.push(chosen);
            rec(&parts[1..], left, acc, out);
            acc.pop();
        }
    }
    rec(&shape.parts, (1..=d).collect(), &mut Vec::new(), &mut out);
    out
}

/// Signed sum over the column stabilizer of `t`, as a vector in tabloid
/// coordinates.
fn polytabloid(
    t: &StandardTableau,
    index: &std::collections::BTreeMap<Vec<Vec<usize>>, usize>,
    ntabloids: usize,
) -> Vec<Q> {
    let shape = t.shape();
    let ncols = shape.parts.first().copied().unwrap_or(0);
    let columns: Vec<Vec<usize>> = (0..ncols)
        .map(|j| t.rows.iter().filter_map(|r| r.get(j).copied()).collect())
        .collect();
    let mut v = vec![Q::zero(); ntabloids];
    // cartesian product over per-column permutations
    let mut stack: Vec<(Vec<(usize, usize)>, i64)> = vec![(Vec::new(), 1)];
    for col in &columns {
        let mut next = Vec::new();
        for target in col.iter().copied().permutations(col.len()) {
            let sigma_sign = perm_sign_of_assignment(col, &target);
            for (subst, sign) in &stack {
                let mut s = subst.clone();
                for (&from, &to) in col.iter().zip(&target) {
                    s.push((from, to));
                }
                next.push((s, sign * sigma_sign));
            }
        }
        stack = next;
    }
    for (subst, sign) in stack {
        let map: std::collections::BTreeMap<usize, usize> = subst.into_iter().collect();
        let rows: Vec<Vec<usize>> = t
            .rows
            .iter()
            .map(|r| r.iter().map(|x| *map.get(x).unwrap_or(x)).collect())
            .collect();
        let tab = tabloid_of(&rows);
        let i = index[&tab];
        v[i] += qint(sign);
    }
    v
}

fn perm_sign_of_assignment(from: &[usize], to: &[usize]) -> i64 {
    // sign of the permutation sending from[i] to to[i]
    let pos: std::collections::BTreeMap<usize, usize> =
        from.iter().copied().enumerate().map(|(i, x)| (x, i)).collect();
    let images: Vec<usize> = to.iter().map(|x| pos[x]).collect();
    let mut inv = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Irreducible symmetric group character value `chi^lambda` at cycle type
/// `mu`, by rim-hook removal on beta numbers.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.size(), mu.size());
    mn_rec(&lambda.parts, &mu.parts)
}

fn mn_rec(lam: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return if lam.is_empty() { 1 } else { 0 };
    }
    let m = mu[0] as i64;
    let k = lam.len();
    let beta: Vec<i64> = lam.iter().enumerate().map(|(i, &l)| l as i64 + (k - 1 - i) as i64).collect();
    let mut total = 0i64;
    for i in 0..k {
        let b = beta[i] - m;
        if b < 0 || beta.contains(&b) {
            continue;
        }
        let ht = beta.iter().filter(|&&x| x < beta[i] && x > b).count();
        let sign = if ht % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = b;
        nb.sort_unstable_by(|a, c| c.cmp(a));
        let newlam: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (k - 1 - j) as i64) as usize)
            .filter(|&x| x > 0)
            .collect();
        total += sign * mn_rec(&newlam, &mu[1..]);
    }
    total
}

/// Jordan type of a nilpotent matrix, from the rank sequence of its powers.
pub fn jordan_type(x: &QMat) -> Partition {
    assert_eq!(x.rows, x.cols);
    let n = x.rows;
    let mut ranks = vec![n];
    let mut p = x.clone();
    while ranks.last() != Some(&0) {
        ranks.push(p.rank());
        p = p.mul(x);
    }
    // column lengths of the Jordan partition
    let cols: Vec<usize> = (1..ranks.len()).map(|k| ranks[k - 1] - ranks[k]).collect();
    Partition::new(cols).transpose()
}

/// For a strictly upper triangular nilpotent `x`, the tableau recording the
/// Jordan types of the top-left `k x k` corners: entry `k` sits in the box
/// added at step `k`. The corners are nested because `x` preserves the
/// standard flag.
pub fn corner_type_tableau(x: &QMat) -> StandardTableau {
    assert_eq!(x.rows, x.cols);
    let n = x.rows;
    for i in 0..n {
        for j in 0..=i {
            assert!(x[(i, j)].is_zero(), "matrix must be strictly upper triangular");
        }
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut prev = Partition::new(vec![]);
    for k in 1..=n {
        let corner = QMat::from_fn(k, k, |i, j| x[(i, j)].clone());
        let shape = jordan_type(&corner);
        // locate the added box
        let mut placed = false;
        for i in 0..shape.len() {
            let old = prev.parts.get(i).copied().unwrap_or(0);
            if shape.parts[i] == old + 1 {
                if i == rows.len() {
                    rows.push(Vec::new());
                }
                rows[i].push(k);
                placed = true;
                break;
            }
        }
        assert!(placed, "corner types must grow one box at a time");
        prev = shape;
    }
    StandardTableau { rows }
}
