//! Finite root data, their Weyl groups and the Bruhat order.
//!
//! Weights are written in the fundamental-weight basis. With the convention
//! `cartan[i][j] = <alpha_i^vee, alpha_j>`, the simple root `alpha_j` is the
//! `j`-th column of the Cartan matrix and `s_i` acts by
//! `lambda -> lambda - lambda_i * alpha_i`.
//!
//! Type `B_n` has `alpha_n` short, type `C_n` has `alpha_n` long (the two
//! Cartan matrices are transposes of each other). In `G_2`, `alpha_1` is
//! short.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalars::{Scalar, MAX_RANK};

pub const DEFAULT_CAP: usize = 100_000;

/// Groups up to this order get a precomputed Bruhat bitset.
const DENSE_BRUHAT_LIMIT: usize = 8192;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G,
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            "G" | "g" => Ok(CartanType::G),
            _ => Err(Error::UnknownCartanType(s.to_string())),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `|W|` from the closed formulas; `None` on overflow.
pub fn weyl_group_order(ty: CartanType, rank: usize) -> Option<u128> {
    let factorial = |n: usize| (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
    let pow2 = |n: usize| 1u128.checked_shl(n as u32);
    match ty {
        CartanType::A => factorial(rank + 1),
        CartanType::B | CartanType::C => pow2(rank)?.checked_mul(factorial(rank)?),
        CartanType::D => pow2(rank.checked_sub(1)?)?.checked_mul(factorial(rank)?),
        CartanType::G => Some(12),
    }
}

/// Cartan matrix of a classical or `G_2` type.
pub fn cartan_matrix(ty: CartanType, rank: usize) -> Result<Vec<Vec<i32>>> {
    let unsupported = || Error::UnsupportedType { label: ty.to_string(), rank };
    let valid = match ty {
        CartanType::A => rank >= 1,
        CartanType::B | CartanType::C => rank >= 2,
        CartanType::D => rank >= 3,
        CartanType::G => rank == 2,
    };
    if !valid {
        return Err(unsupported());
    }
    let mut a = vec![vec![0; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i32, aji: i32| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match ty {
        CartanType::A => (0..rank - 1).for_each(|i| link(i, i + 1, -1, -1)),
        CartanType::B => {
            (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(rank - 2, rank - 1, -1, -2);
        }
        CartanType::C => {
            (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(rank - 2, rank - 1, -2, -1);
        }
        CartanType::D => {
            (0..rank - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(rank - 3, rank - 1, -1, -1);
        }
        CartanType::G => link(0, 1, -3, -1),
    }
    Ok(a)
}

/// An element of the Weyl group of a fixed [`RootDatum`].
///
/// Elements are numbered by (length, canonical word), so the numbering is a
/// linear extension of the Bruhat order and `WeylElt(0)` is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeylElt(u32);

impl WeylElt {
    pub const IDENTITY: WeylElt = WeylElt(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Self {
        WeylElt(i as u32)
    }
}

#[derive(Clone, Debug)]
pub struct Root {
    /// Coefficients in the simple-root basis.
    pub simple_coords: Vec<i32>,
    /// Coordinates in the fundamental-weight basis.
    pub weight: Vec<i32>,
    /// Coefficients of the coroot in the simple-coroot basis; the pairing with
    /// a weight `lambda` is `coroot . lambda`.
    pub coroot: Vec<i32>,
    pub reflection: WeylElt,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.simple_coords.iter().sum()
    }

    pub fn pairing(&self, weight: &[i32]) -> i32 {
        self.coroot.iter().zip(weight).map(|(a, b)| a * b).sum()
    }
}

#[derive(Clone, Debug)]
struct Element {
    word: Vec<usize>,
    matrix: Vec<i32>,
    inverse: WeylElt,
}

#[derive(Debug)]
enum Bruhat {
    /// Row `u` holds the up-set `{v : u <= v}`.
    Dense(Vec<Vec<u64>>),
    Lifting,
}

#[derive(Debug)]
pub struct RootDatum {
    label: String,
    cartan_type: Option<CartanType>,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    simple_roots: Vec<Vec<i32>>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Vec<i32>, usize>,
    elements: Vec<Element>,
    left: Vec<WeylElt>,
    right: Vec<WeylElt>,
    longest: WeylElt,
    bruhat: Bruhat,
}

fn mat_vec(m: &[i32], v: &[i32]) -> Vec<i32> {
    let r = v.len();
    (0..r).map(|i| (0..r).map(|j| m[i * r + j] * v[j]).sum()).collect()
}

fn mat_mul(a: &[i32], b: &[i32], r: usize) -> Vec<i32> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik != 0 {
                for j in 0..r {
                    out[i * r + j] += aik * b[k * r + j];
                }
            }
        }
    }
    out
}

impl RootDatum {
    pub fn build(ty: CartanType, rank: usize) -> Result<Self> {
        Self::build_with_cap(ty, rank, DEFAULT_CAP)
    }

    pub fn build_with_cap(ty: CartanType, rank: usize, cap: usize) -> Result<Self> {
        let cartan = cartan_matrix(ty, rank)?;
        if weyl_group_order(ty, rank).is_none_or(|n| n > cap as u128) {
            return Err(Error::CapExceeded { cap });
        }
        let mut d = Self::from_cartan(&format!("{ty}{rank}"), cartan, cap)?;
        d.cartan_type = Some(ty);
        Ok(d)
    }

    /// Builds the datum of any finite-type Cartan matrix.
    pub fn from_cartan(label: &str, cartan: Vec<Vec<i32>>, cap: usize) -> Result<Self> {
        let r = cartan.len();
        if r == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if r > MAX_RANK {
            return Err(Error::RankTooLarge(r));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != r {
                return Err(Error::InvalidCartan("matrix is not square".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan(format!("diagonal entry ({i},{j}) is {a}")));
                }
                if i != j && (a > 0 || (a == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidCartan(format!("off-diagonal entry ({i},{j}) is {a}")));
                }
            }
        }
        let simple_roots: Vec<Vec<i32>> = (0..r).map(|j| (0..r).map(|i| cartan[i][j]).collect()).collect();
        let gens: Vec<Vec<i32>> = (0..r)
            .map(|i| {
                let mut m = vec![0; r * r];
                for k in 0..r {
                    m[k * r + k] = 1;
                    m[k * r + i] -= simple_roots[i][k];
                }
                m
            })
            .collect();

        // breadth-first closure under left multiplication, keyed by w(rho)
        let rho = vec![1; r];
        let mut identity = vec![0; r * r];
        for k in 0..r {
            identity[k * r + k] = 1;
        }
        let mut matrices = vec![identity];
        let mut keys = vec![rho.clone()];
        let mut lengths = vec![0usize];
        let mut index: HashMap<Vec<i32>, usize> = HashMap::new();
        index.insert(rho.clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let key = mat_vec(g, &keys[w]);
                if index.contains_key(&key) {
                    continue;
                }
                if matrices.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                let id = matrices.len();
                matrices.push(mat_mul(g, &matrices[w], r));
                keys.push(key.clone());
                lengths.push(lengths[w] + 1);
                index.insert(key, id);
                queue.push_back(id);
            }
        }
        let n = matrices.len();
        let left_raw: Vec<usize> = (0..n)
            .flat_map(|w| {
                let keys = &keys;
                let index = &index;
                let gens = &gens;
                (0..r).map(move |i| index[&mat_vec(&gens[i], &keys[w])])
            })
            .collect();

        // lexicographically smallest reduced words: smallest left descent first
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
        for w in 1..n {
            // BFS order is by length, so the shorter neighbour is done
            let i = (0..r)
                .find(|&i| lengths[left_raw[w * r + i]] < lengths[w])
                .expect("nonidentity element has a left descent");
            let mut word = vec![i];
            word.extend_from_slice(&words[left_raw[w * r + i]]);
            words[w] = word;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| lengths[a].cmp(&lengths[b]).then_with(|| words[a].cmp(&words[b])));
        let mut new_id = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let mut left = Vec::with_capacity(n * r);
        let mut right = Vec::with_capacity(n * r);
        for &old in &order {
            for i in 0..r {
                left.push(WeylElt(new_id[left_raw[old * r + i]] as u32));
                let shift = mat_vec(&matrices[old], &simple_roots[i]);
                let k: Vec<i32> = keys[old].iter().zip(&shift).map(|(a, b)| a - b).collect();
                right.push(WeylElt(new_id[index[&k]] as u32));
            }
        }
        let mut elements: Vec<Element> = order
            .iter()
            .map(|&old| Element {
                word: words[old].clone(),
                matrix: matrices[old].clone(),
                inverse: WeylElt::IDENTITY,
            })
            .collect();
        let longest = WeylElt((n - 1) as u32);

        let mut datum = RootDatum {
            label: label.to_string(),
            cartan_type: None,
            rank: r,
            cartan,
            simple_roots,
            positive_roots: Vec::new(),
            root_index: HashMap::new(),
            elements: Vec::new(),
            left,
            right,
            longest,
            bruhat: Bruhat::Lifting,
        };
        for e in elements.iter_mut() {
            let rev: Vec<usize> = e.word.iter().rev().copied().collect();
            e.inverse = datum.right_word(WeylElt::IDENTITY, &rev);
        }
        datum.elements = elements;
        datum.build_roots();
        if n <= DENSE_BRUHAT_LIMIT {
            datum.bruhat = Bruhat::Dense(datum.dense_bruhat());
        }
        Ok(datum)
    }

    fn build_roots(&mut self) {
        let r = self.rank;
        // closure of the simple roots under reflections, in simple-root coordinates
        let mut roots: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            roots.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..r {
                let pairing: i32 = (0..r).map(|j| self.cartan[i][j] * b[j]).sum();
                let mut c = b.clone();
                c[i] -= pairing;
                if roots.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let mut positive: Vec<Vec<i32>> = roots.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive.sort_by(|a, b| {
            let (ha, hb): (i32, i32) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let mut out = Vec::with_capacity(positive.len());
        for c in positive {
            let weight: Vec<i32> = (0..r).map(|k| (0..r).map(|j| self.cartan[k][j] * c[j]).sum()).collect();
            // beta = w(alpha_j) gives s_beta = w s_j w^{-1}
            let (w, j) = (0..self.elements.len())
                .flat_map(|w| (0..r).map(move |j| (w, j)))
                .find(|&(w, j)| mat_vec(&self.elements[w].matrix, &self.simple_roots[j]) == weight)
                .expect("every root is conjugate to a simple root");
            let w = WeylElt(w as u32);
            let refl = self.multiply(self.multiply(w, self.simple(j)), self.inverse(w));
            let m = &self.elements[refl.index()].matrix;
            let k = weight.iter().position(|&x| x != 0).unwrap();
            let coroot: Vec<i32> = (0..r)
                .map(|j| {
                    let ident = if k == j { 1 } else { 0 };
                    (ident - m[k * r + j]) / weight[k]
                })
                .collect();
            out.push(Root { simple_coords: c, weight, coroot, reflection: refl });
        }
        self.root_index = out.iter().enumerate().map(|(i, b)| (b.weight.clone(), i)).collect();
        self.positive_roots = out;
    }

    fn dense_bruhat(&self) -> Vec<Vec<u64>> {
        let n = self.order();
        let blocks = n.div_ceil(64);
        let mut up = vec![vec![0u64; blocks]; n];
        let reflections: Vec<WeylElt> = self.positive_roots.iter().map(|b| b.reflection).collect();
        for u in (0..n).rev() {
            let uw = WeylElt(u as u32);
            let mut row = vec![0u64; blocks];
            row[u / 64] |= 1 << (u % 64);
            for &t in &reflections {
                let ut = self.multiply(uw, t);
                if self.length(ut) == self.length(uw) + 1 {
                    for (a, b) in row.iter_mut().zip(&up[ut.index()]) {
                        *a |= *b;
                    }
                }
            }
            up[u] = row;
        }
        up
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Order of the Weyl group.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = WeylElt> + ExactSizeIterator + Clone {
        (0..self.elements.len() as u32).map(WeylElt)
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt::IDENTITY
    }

    /// The simple reflection `s_i` (0-based `i`).
    pub fn simple(&self, i: usize) -> WeylElt {
        self.left[i]
    }

    pub fn longest(&self) -> WeylElt {
        self.longest
    }

    pub fn simple_root(&self, i: usize) -> &[i32] {
        &self.simple_roots[i]
    }

    pub fn fundamental_weight(&self, i: usize) -> Vec<i32> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn root_index(&self, weight: &[i32]) -> Option<usize> {
        self.root_index.get(weight).copied()
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.rank).all(|i| (0..self.rank).all(|j| i == j || self.cartan[i][j] >= -1))
    }

    /// The canonical (lexicographically smallest) reduced word, 0-based letters.
    pub fn word(&self, w: WeylElt) -> &[usize] {
        &self.elements[w.index()].word
    }

    pub fn length(&self, w: WeylElt) -> usize {
        self.elements[w.index()].word.len()
    }

    /// Row-major action matrix on fundamental-weight coordinates.
    pub fn matrix(&self, w: WeylElt) -> &[i32] {
        &self.elements[w.index()].matrix
    }

    /// `s_i * w`.
    pub fn left_mul_simple(&self, i: usize, w: WeylElt) -> WeylElt {
        self.left[w.index() * self.rank + i]
    }

    /// `w * s_i`.
    pub fn right_mul_simple(&self, w: WeylElt, i: usize) -> WeylElt {
        self.right[w.index() * self.rank + i]
    }

    fn right_word(&self, mut w: WeylElt, word: &[usize]) -> WeylElt {
        for &i in word {
            w = self.right_mul_simple(w, i);
        }
        w
    }

    pub fn multiply(&self, u: WeylElt, v: WeylElt) -> WeylElt {
        self.right_word(u, self.word(v))
    }

    pub fn inverse(&self, u: WeylElt) -> WeylElt {
        self.elements[u.index()].inverse
    }

    /// Product of an arbitrary (not necessarily reduced) word.
    pub fn element_from_word(&self, word: &[usize]) -> WeylElt {
        self.right_word(WeylElt::IDENTITY, word)
    }

    /// Every reduced word of `w`, lexicographically sorted.
    pub fn reduced_words(&self, w: WeylElt) -> Vec<Vec<usize>> {
        if w == WeylElt::IDENTITY {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rank {
            let ws = self.right_mul_simple(w, i);
            if self.length(ws) < self.length(w) {
                for mut word in self.reduced_words(ws) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out.sort();
        out
    }

    /// `w0 w w0`.
    pub fn conjugate_by_longest(&self, w: WeylElt) -> WeylElt {
        let w0 = self.longest;
        self.multiply(self.multiply(w0, w), w0)
    }

    /// Order of `s_i s_j`.
    pub fn coxeter_m(&self, i: usize, j: usize) -> usize {
        let g = self.multiply(self.simple(i), self.simple(j));
        let mut x = g;
        let mut m = 1;
        while x != WeylElt::IDENTITY {
            x = self.multiply(x, g);
            m += 1;
        }
        m
    }

    pub fn bruhat_leq(&self, u: WeylElt, v: WeylElt) -> bool {
        match &self.bruhat {
            Bruhat::Dense(up) => up[u.index()][v.index() / 64] >> (v.index() % 64) & 1 == 1,
            Bruhat::Lifting => self.bruhat_leq_lifting(u, v),
        }
    }

    /// Bruhat comparison by the lifting property: for a left descent `s` of
    /// `v`, `u <= v` iff `min(u, su) <= sv`.
    pub fn bruhat_leq_lifting(&self, mut u: WeylElt, mut v: WeylElt) -> bool {
        loop {
            if self.length(u) > self.length(v) {
                return false;
            }
            if v == WeylElt::IDENTITY {
                return u == WeylElt::IDENTITY;
            }
            let s = self.word(v)[0];
            let su = self.left_mul_simple(s, u);
            if self.length(su) < self.length(u) {
                u = su;
            }
            v = self.left_mul_simple(s, v);
        }
    }

    /// Elements `z` with `lo <= z <= hi`, in increasing numbering.
    pub fn interval(&self, lo: WeylElt, hi: WeylElt) -> Vec<WeylElt> {
        self.elements()
            .filter(|&z| self.bruhat_leq(lo, z) && self.bruhat_leq(z, hi))
            .collect()
    }

    pub fn act_weight(&self, w: WeylElt, weight: &[i32]) -> Vec<i32> {
        mat_vec(self.matrix(w), weight)
    }

    /// Weyl action on the exponents of a scalar.
    pub fn act(&self, w: WeylElt, s: &Scalar) -> Scalar {
        if w == WeylElt::IDENTITY {
            return s.clone();
        }
        s.act_matrix(self.matrix(w), self.rank)
    }

    /// `beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})` along the canonical word.
    pub fn inversion_sequence(&self, v: WeylElt) -> Vec<Vec<i32>> {
        let mut prefix = WeylElt::IDENTITY;
        let mut out = Vec::with_capacity(self.length(v));
        for &i in self.word(v) {
            out.push(self.act_weight(prefix, &self.simple_roots[i]));
            prefix = self.right_mul_simple(prefix, i);
        }
        out
    }

    /// `R(v)` as indices into [`positive_roots`](Self::positive_roots).
    pub fn inversion_set(&self, v: WeylElt) -> BTreeSet<usize> {
        self.inversion_sequence(v)
            .iter()
            .map(|b| self.root_index(b).expect("inversion roots are positive"))
            .collect()
    }

    /// The reflection in a root (positive or negative).
    pub fn reflection(&self, beta: &[i32]) -> Result<WeylElt> {
        if beta.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: beta.len() });
        }
        let neg: Vec<i32> = beta.iter().map(|c| -c).collect();
        self.root_index(beta)
            .or_else(|| self.root_index(&neg))
            .map(|i| self.positive_roots[i].reflection)
            .ok_or_else(|| Error::NotARoot(beta.to_vec()))
    }

    /// `s1s2s1` style rendering (1-based letters), `e` for the identity.
    pub fn word_string(&self, w: WeylElt) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|i| format!("s{}", i + 1)).collect()
    }

    /// Parses `e`, `s1s2s1` or `s1.s2.s1`. Returns the element and whether the
    /// input word was reduced.
    pub fn parse_word(&self, text: &str) -> Result<(WeylElt, bool)> {
        let err = |reason: String| Error::MalformedWord { word: text.to_string(), reason };
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok((WeylElt::IDENTITY, true));
        }
        let mut letters = Vec::new();
        let bytes = t.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                b'.' => pos += 1,
                b's' => {
                    let start = pos + 1;
                    let mut end = start;
                    while end < bytes.len() && bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                    let digits = &t[start..end];
                    let k: usize = digits
                        .parse()
                        .map_err(|_| err(format!("letter 's' at offset {pos} has no index")))?;
                    if k == 0 || k > self.rank {
                        return Err(err(format!("unknown letter s{k} (rank is {})", self.rank)));
                    }
                    letters.push(k - 1);
                    pos = end;
                }
                _ => {
                    let c = t[pos..].chars().next().unwrap();
                    return Err(err(format!("unexpected letter {c:?} at offset {pos}")));
                }
            }
        }
        let w = self.element_from_word(&letters);
        Ok((w, self.length(w) == letters.len()))
    }

    /// JSON description: Cartan matrix, roots, element table.
    pub fn to_json(&self) -> Value {
        let roots: Vec<Value> = self
            .positive_roots
            .iter()
            .map(|b| {
                json!({
                    "simple_coords": b.simple_coords,
                    "weight": b.weight,
                    "coroot": b.coroot,
                    "reflection": self.word_string(b.reflection),
                })
            })
            .collect();
        let elements: Vec<Value> = self
            .elements()
            .map(|w| {
                json!({
                    "id": w.index(),
                    "word": self.word_string(w),
                    "length": self.length(w),
                    "matrix": self.matrix(w),
                })
            })
            .collect();
        json!({
            "schema": 1,
            "label": self.label,
            "rank": self.rank,
            "convention": "cartan[i][j] = <alpha_i^vee, alpha_j>; weights in fundamental-weight coordinates; B_n has alpha_n short, C_n has alpha_n long",
            "cartan": self.cartan,
            "positive_roots": roots,
            "elements": elements,
            "longest": self.word_string(self.longest),
        })
    }
}
