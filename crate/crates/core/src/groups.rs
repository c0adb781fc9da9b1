//! Abstract finite groups given by Cayley tables: recognition, isomorphism,
//! abelianization, automorphisms and quotients.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::GroupError;
use crate::isometry::{quaternion_group, FiniteIsomGroup, IsometryS3};
use crate::quaternion::constants;
use crate::Quat;

/// Default order bound for recognition and isomorphism testing.
pub const DEFAULT_ANALYSIS_BOUND: usize = 1000;
/// Order bound for brute-force automorphism enumeration.
pub const AUTOMORPHISM_BOUND: usize = 200;

/// A finite group as a multiplication table on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableGroup {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
}

impl TableGroup {
    pub fn from_table(n: usize, mul: Vec<u32>, identity: usize) -> Self {
        assert_eq!(mul.len(), n * n, "table must be n×n");
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] as usize == identity {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        TableGroup { n, mul, inv, identity }
    }

    pub fn cyclic(k: usize) -> Self {
        let mul = (0..k * k).map(|i| ((i / k + i % k) % k) as u32).collect();
        Self::from_table(k, mul, 0)
    }

    /// Symmetric group on three letters, as permutations.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap() as u32;
        let mut mul = Vec::with_capacity(36);
        for a in &perms {
            for b in &perms {
                mul.push(idx([a[b[0]], a[b[1]], a[b[2]]]));
            }
        }
        Self::from_table(6, mul, 0)
    }

    pub fn direct_product(a: &TableGroup, b: &TableGroup) -> Self {
        let n = a.n * b.n;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (x1, x2) = (x / b.n, x % b.n);
                let (y1, y2) = (y / b.n, y % b.n);
                mul.push((a.mul(x1, y1) * b.n + b.mul(x2, y2)) as u32);
            }
        }
        Self::from_table(n, mul, a.identity * b.n + b.identity)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|a| self.element_order(a)).collect()
    }

    /// Number of elements of each order.
    pub fn order_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for o in self.element_orders() {
            *census.entry(o).or_insert(0) += 1;
        }
        census
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.n).filter(|&i| seen[i]).collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let mut member = vec![false; self.n];
        elems.iter().for_each(|&e| member[e] = true);
        member[self.identity] && elems.iter().all(|&a| elems.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        let mut member = vec![false; self.n];
        elems.iter().for_each(|&e| member[e] = true);
        (0..self.n).all(|h| elems.iter().all(|&g| member[self.conj(h, g)]))
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup(&comms)
    }

    /// Restriction of the table to a subgroup, renumbered in sorted order.
    pub fn restrict(&self, elems: &[usize]) -> TableGroup {
        let mut pos = vec![u32::MAX; self.n];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i as u32;
        }
        let k = elems.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in elems {
            for &b in elems {
                mul.push(pos[self.mul(a, b)]);
            }
        }
        TableGroup::from_table(k, mul, pos[self.identity] as usize)
    }

    /// `G/N` for a normal subgroup `N`, with the coset index of every element.
    pub fn quotient(&self, normal: &[usize]) -> Result<(TableGroup, Vec<usize>), GroupError> {
        if !self.is_subgroup(normal) || !self.is_normal(normal) {
            return Err(GroupError::WrongType("quotient by a non-normal subset".into()));
        }
        let mut coset = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if coset[g] == usize::MAX {
                for &k in normal {
                    coset[self.mul(g, k)] = reps.len();
                }
                reps.push(g);
            }
        }
        let k = reps.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                mul.push(coset[self.mul(a, b)] as u32);
            }
        }
        Ok((TableGroup::from_table(k, mul, coset[self.identity]), coset))
    }

    /// A small generating set, chosen greedily from elements of large order.
    pub fn generating_set(&self) -> Vec<usize> {
        let orders = self.element_orders();
        let mut by_order: Vec<usize> = (0..self.n).collect();
        by_order.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        while span.len() < self.n {
            // pick the element that enlarges the span the most
            let mut best: Option<(usize, usize)> = None;
            let mut member = vec![false; self.n];
            span.iter().for_each(|&e| member[e] = true);
            for &c in &by_order {
                if member[c] {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(c);
                let size = self.subgroup(&trial).len();
                if best.map_or(true, |(_, s)| size > s) {
                    best = Some((c, size));
                    if size == self.n {
                        break;
                    }
                }
                if self.n > 64 && best.is_some() && gens.len() + 1 >= 2 {
                    // large groups: a single sweep over the top candidates suffices
                    if size * 2 > self.n {
                        break;
                    }
                }
            }
            let (c, _) = best.expect("span is a proper subgroup");
            gens.push(c);
            span = self.subgroup(&gens);
        }
        gens
    }

    /// Extend generator images to a homomorphism into `target`, if consistent.
    fn extend(&self, gens: &[usize], images: &[usize], target: &TableGroup) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.n];
        map[self.identity] = target.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let fy = target.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn is_bijective(map: &[usize]) -> bool {
        let mut seen = vec![false; map.len()];
        for &m in map {
            if m >= map.len() || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        true
    }

    /// Every isomorphism `self → other`, visited through the callback until it returns `false`.
    fn for_each_isomorphism(&self, other: &TableGroup, mut visit: impl FnMut(&[usize]) -> bool) {
        if self.n != other.n || self.order_census() != other.order_census() {
            return;
        }
        let gens = self.generating_set();
        let so = self.element_orders();
        let oo = other.element_orders();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| (0..other.n).filter(|&c| oo[c] == so[g]).collect())
            .collect();
        let mut images = Vec::with_capacity(gens.len());
        fn rec(
            src: &TableGroup,
            dst: &TableGroup,
            gens: &[usize],
            cands: &[Vec<usize>],
            images: &mut Vec<usize>,
            so: &[usize],
            oo: &[usize],
            visit: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            let k = images.len();
            if k == gens.len() {
                if let Some(map) = src.extend(gens, images, dst) {
                    if TableGroup::is_bijective(&map) {
                        return visit(&map);
                    }
                }
                return true;
            }
            for &c in &cands[k] {
                // products with earlier generators must keep their orders
                if (0..k).any(|i| so[src.mul(gens[i], gens[k])] != oo[dst.mul(images[i], c)]) {
                    continue;
                }
                images.push(c);
                let go_on = rec(src, dst, gens, cands, images, so, oo, visit);
                images.pop();
                if !go_on {
                    return false;
                }
            }
            true
        }
        rec(self, other, &gens, &candidates, &mut images, &so, &oo, &mut visit);
    }

    pub fn find_isomorphism(&self, other: &TableGroup) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each_isomorphism(other, |m| {
            found = Some(m.to_vec());
            false
        });
        found
    }

    pub fn is_isomorphic(&self, other: &TableGroup) -> bool {
        self.find_isomorphism(other).is_some()
    }

    pub fn automorphism_count(&self) -> usize {
        let mut count = 0;
        self.for_each_isomorphism(self, |_| {
            count += 1;
            true
        });
        count
    }

    /// Invariant factors `d₁ | d₂ | …` of an abelian group.
    pub fn invariant_factors(&self) -> Vec<usize> {
        debug_assert!(self.is_abelian());
        let mut g = self.clone();
        let mut factors = Vec::new();
        while g.n > 1 {
            let orders = g.element_orders();
            let (top, &d) = orders.iter().enumerate().max_by_key(|(_, o)| **o).unwrap();
            factors.push(d);
            let sub = g.subgroup(&[top]);
            g = g.quotient(&sub).expect("abelian subgroups are normal").0;
        }
        factors.reverse();
        factors
    }
}

/// Isomorphism type of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum GroupIsoType {
    Cyclic(usize),
    Q8,
    BinaryDihedral(usize),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    DirectProduct(Vec<GroupIsoType>),
    SymmetricS3,
    KleinFour,
    Unrecognized(usize),
}

impl GroupIsoType {
    pub fn order(&self) -> usize {
        use GroupIsoType::*;
        match self {
            Cyclic(k) => *k,
            Q8 => 8,
            BinaryDihedral(k) => *k,
            BinaryTetrahedral => 24,
            BinaryOctahedral => 48,
            BinaryIcosahedral => 120,
            DirectProduct(fs) => fs.iter().map(|f| f.order()).product(),
            SymmetricS3 => 6,
            KleinFour => 4,
            Unrecognized(n) => *n,
        }
    }

    /// A concrete table realizing the type, when one is known.
    pub fn model(&self) -> Option<TableGroup> {
        use GroupIsoType::*;
        Some(match self {
            Cyclic(k) => TableGroup::cyclic(*k),
            KleinFour => TableGroup::direct_product(&TableGroup::cyclic(2), &TableGroup::cyclic(2)),
            SymmetricS3 => TableGroup::symmetric3(),
            Q8 => quaternion_model(&[Quat::i(), Quat::j()]),
            BinaryDihedral(k) => quaternion_model(&[Quat::xi((*k / 2) as i64, 1), Quat::j()]),
            BinaryTetrahedral => quaternion_model(&[Quat::j(), constants::octa_y()]),
            BinaryOctahedral => quaternion_model(&[constants::octa_x(), constants::octa_y()]),
            BinaryIcosahedral => quaternion_model(&[Quat::j(), constants::icosa_y()]),
            DirectProduct(fs) => {
                let mut it = fs.iter();
                let first = it.next()?.model()?;
                it.try_fold(first, |acc, f| Some(TableGroup::direct_product(&acc, &f.model()?)))?
            }
            Unrecognized(_) => return None,
        })
    }
}

fn quaternion_model(gens: &[Quat]) -> TableGroup {
    quaternion_group(gens).expect("finite quaternion group").table().as_ref().clone()
}

impl fmt::Display for GroupIsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupIsoType::*;
        match self {
            Cyclic(k) => write!(f, "C{k}"),
            Q8 => write!(f, "Q8"),
            BinaryDihedral(k) => write!(f, "D*{k}"),
            BinaryTetrahedral => write!(f, "T*24"),
            BinaryOctahedral => write!(f, "O*48"),
            BinaryIcosahedral => write!(f, "I*120"),
            DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join("×"))
            }
            SymmetricS3 => write!(f, "S3"),
            KleinFour => write!(f, "C2×C2"),
            Unrecognized(n) => write!(f, "unrecognized({n})"),
        }
    }
}

fn abelian_type(factors: &[usize]) -> GroupIsoType {
    match factors {
        [] => GroupIsoType::Cyclic(1),
        [k] => GroupIsoType::Cyclic(*k),
        [2, 2] => GroupIsoType::KleinFour,
        fs => GroupIsoType::DirectProduct(fs.iter().map(|&k| GroupIsoType::Cyclic(k)).collect()),
    }
}

fn flatten_product(parts: Vec<GroupIsoType>) -> GroupIsoType {
    let mut out = Vec::new();
    for p in parts {
        match p {
            GroupIsoType::DirectProduct(fs) => out.extend(fs),
            GroupIsoType::KleinFour => out.extend([GroupIsoType::Cyclic(2), GroupIsoType::Cyclic(2)]),
            other => out.push(other),
        }
    }
    out.retain(|f| *f != GroupIsoType::Cyclic(1));
    out.sort();
    match out.len() {
        0 => GroupIsoType::Cyclic(1),
        1 => out.pop().unwrap(),
        _ => GroupIsoType::DirectProduct(out),
    }
}

/// Nonabelian groups with a single involution: the binary polyhedral family.
fn recognize_indecomposable(t: &TableGroup) -> Option<GroupIsoType> {
    use GroupIsoType::*;
    let n = t.order();
    let census = t.order_census();
    let involutions = census.get(&2).copied().unwrap_or(0);
    let candidate = match n {
        6 => SymmetricS3,
        8 if involutions == 1 => Q8,
        24 if involutions == 1 && !census.contains_key(&12) => BinaryTetrahedral,
        48 if involutions == 1 && !census.contains_key(&24) => BinaryOctahedral,
        120 if involutions == 1 => BinaryIcosahedral,
        _ if n % 4 == 0 && involutions == 1 && census.contains_key(&(n / 2)) => BinaryDihedral(n),
        _ => return None,
    };
    let model = candidate.model()?;
    t.is_isomorphic(&model).then_some(candidate)
}

/// Split off a direct factor: a central cyclic Hall factor first, then (for small groups)
/// a brute-force search over pairs of normal subgroups.
fn split_direct(t: &TableGroup) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = t.order();
    let center = t.center();
    let orders = t.element_orders();
    let mut central: Vec<usize> = center.iter().copied().filter(|&z| z != t.identity()).collect();
    central.sort_by_key(|&z| std::cmp::Reverse(orders[z]));
    for &z in &central {
        let k = orders[z];
        if k == n || k.gcd(&(n / k)) != 1 {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&g| (n / k) % orders[g] == 0).collect();
        if comp.len() == n / k && t.is_subgroup(&comp) {
            return Some((t.subgroup(&[z]), comp));
        }
    }
    if n > 64 {
        return None;
    }
    let mut normals: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in a..n {
            let s = t.subgroup(&[a, b]);
            if s.len() > 1 && s.len() < n && !normals.contains(&s) && t.is_normal(&s) {
                normals.push(s);
            }
        }
    }
    normals.sort_by_key(|s| s.len());
    for a in &normals {
        for b in &normals {
            if a.len() * b.len() == n && a.iter().filter(|x| b.contains(x)).count() == 1 {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Isomorphism type of a table group.
pub fn recognize_table(t: &TableGroup, bound: usize) -> Result<GroupIsoType, GroupError> {
    if t.order() > bound {
        return Err(GroupError::TooLarge { order: t.order(), bound });
    }
    if t.is_abelian() {
        return Ok(abelian_type(&t.invariant_factors()));
    }
    if let Some(kind) = recognize_indecomposable(t) {
        return Ok(kind);
    }
    if let Some((a, b)) = split_direct(t) {
        let ra = recognize_table(&t.restrict(&a), bound)?;
        let rb = recognize_table(&t.restrict(&b), bound)?;
        return Ok(flatten_product(vec![ra, rb]));
    }
    Ok(GroupIsoType::Unrecognized(t.order()))
}

pub fn recognize(g: &FiniteIsomGroup) -> Result<GroupIsoType, GroupError> {
    recognize_table(&g.table(), DEFAULT_ANALYSIS_BOUND)
}

pub fn is_isomorphic(g: &FiniteIsomGroup, h: &FiniteIsomGroup) -> Result<bool, GroupError> {
    for x in [g, h] {
        if x.order() > DEFAULT_ANALYSIS_BOUND {
            return Err(GroupError::TooLarge { order: x.order(), bound: DEFAULT_ANALYSIS_BOUND });
        }
    }
    Ok(g.table().is_isomorphic(&h.table()))
}

pub fn abelianization_table(t: &TableGroup) -> GroupIsoType {
    let comm = t.commutator_subgroup();
    let (q, _) = t.quotient(&comm).expect("commutator subgroup is normal");
    abelian_type(&q.invariant_factors())
}

pub fn abelianization(g: &FiniteIsomGroup) -> Result<GroupIsoType, GroupError> {
    if g.order() > DEFAULT_ANALYSIS_BOUND {
        return Err(GroupError::TooLarge { order: g.order(), bound: DEFAULT_ANALYSIS_BOUND });
    }
    Ok(abelianization_table(&g.table()))
}

/// Whether `x^a = y^b = (xy)^c` with a central common value of order at most 2,
/// `x` and `y` generate `G`, and `|G|` is the order of the named binary polyhedral group.
pub fn verify_presentation(
    g: &FiniteIsomGroup,
    x: &IsometryS3,
    y: &IsometryS3,
    exponents: (u32, u32, u32),
) -> Result<bool, GroupError> {
    let xi = g.index_of(x).ok_or(GroupError::NotAMember)?;
    let yi = g.index_of(y).ok_or(GroupError::NotAMember)?;
    let t = g.table();
    let (a, b, c) = exponents;
    let xa = t.pow(xi, a as usize);
    let yb = t.pow(yi, b as usize);
    let xyc = t.pow(t.mul(xi, yi), c as usize);
    if xa != yb || yb != xyc {
        return Ok(false);
    }
    let central = (0..t.order()).all(|h| t.mul(h, xa) == t.mul(xa, h));
    if !central || t.mul(xa, xa) != t.identity() {
        return Ok(false);
    }
    if t.subgroup(&[xi, yi]).len() != t.order() {
        return Ok(false);
    }
    Ok(presentation_order(exponents) == Some(t.order()))
}

/// Order of `⟨x, y | x^a = y^b = (xy)^c⟩` when finite.
pub fn presentation_order((a, b, c): (u32, u32, u32)) -> Option<usize> {
    let num = (b * c + a * c + a * b) as i64;
    let den = (a * b * c) as i64;
    let excess = num - den;
    if excess <= 0 {
        return None;
    }
    let order = 4 * den;
    (order % excess == 0).then(|| (order / excess) as usize)
}

/// An automorphism of a [`FiniteIsomGroup`], as an index permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismRecord {
    pub images: Vec<usize>,
    pub inner: bool,
    pub witness: Option<usize>,
}

impl AutomorphismRecord {
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// `g ↦ w g w⁻¹` on `G`, with its inner/outer status decided.
pub fn automorphism_from_conjugation(
    w: &IsometryS3,
    g: &FiniteIsomGroup,
) -> Result<AutomorphismRecord, GroupError> {
    if !g.is_normalized_by(w) {
        return Err(GroupError::NotNormalizing);
    }
    let winv = w.invert();
    let images: Vec<usize> = g
        .elements()
        .iter()
        .map(|e| g.index_of(&w.compose(e).compose(&winv)).ok_or(GroupError::NotNormalizing))
        .collect::<Result<_, _>>()?;
    let witness = inner_witness(&g.table(), &images, &generator_indices(g));
    Ok(AutomorphismRecord { images, inner: witness.is_some(), witness })
}

fn generator_indices(g: &FiniteIsomGroup) -> Vec<usize> {
    g.generators().iter().map(|x| g.index_of(x).expect("generator is a member")).collect()
}

/// Some `h` with `h x h⁻¹ = images[x]` on the generators.
pub fn inner_witness(t: &TableGroup, images: &[usize], gens: &[usize]) -> Option<usize> {
    (0..t.order()).find(|&h| gens.iter().all(|&x| t.conj(h, x) == images[x]))
}

pub fn is_inner(a: &AutomorphismRecord) -> bool {
    a.inner
}

/// `|Out(G)| = |Aut(G)| / |Inn(G)|`.
pub fn outer_automorphism_order(g: &FiniteIsomGroup) -> Result<usize, GroupError> {
    if g.order() > AUTOMORPHISM_BOUND {
        return Err(GroupError::TooLarge { order: g.order(), bound: AUTOMORPHISM_BOUND });
    }
    Ok(outer_automorphism_order_table(&g.table()))
}

pub fn outer_automorphism_order_table(t: &TableGroup) -> usize {
    let inn = t.order() / t.center().len();
    t.automorphism_count() / inn
}

/// `N/G` for a normal subgroup `G ⊂ N`.
pub fn quotient_group(n: &FiniteIsomGroup, g: &FiniteIsomGroup) -> Result<TableGroup, GroupError> {
    let sub = n.subgroup_indices(g).ok_or(GroupError::NotAMember)?;
    let mut sorted = sub;
    sorted.sort_unstable();
    n.table().quotient(&sorted).map(|(q, _)| q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left(q: Quat) -> IsometryS3 {
        IsometryS3::rotation(q, Quat::one())
    }

    #[test]
    fn presentation_orders() {
        assert_eq!(presentation_order((2, 3, 5)), Some(120));
        assert_eq!(presentation_order((2, 2, 2)), Some(8));
        assert_eq!(presentation_order((2, 2, 5)), Some(20));
        assert_eq!(presentation_order((2, 3, 6)), None);
    }

    #[test]
    fn q8_presentation() {
        let q8 = quaternion_group(&[Quat::j(), Quat::i()]).unwrap();
        assert!(verify_presentation(&q8, &left(Quat::j()), &left(Quat::i()), (2, 2, 2)).unwrap());
        assert!(!verify_presentation(&q8, &left(Quat::j()), &left(Quat::i()), (2, 3, 5)).unwrap());
    }

    #[test]
    fn recognition() {
        let q8 = quaternion_group(&[Quat::i(), Quat::j()]).unwrap();
        assert_eq!(recognize(&q8).unwrap(), GroupIsoType::Q8);
        let t = TableGroup::direct_product(&TableGroup::cyclic(2), &TableGroup::symmetric3());
        assert_eq!(
            recognize_table(&t, 1000).unwrap(),
            GroupIsoType::DirectProduct(vec![GroupIsoType::Cyclic(2), GroupIsoType::SymmetricS3])
        );
        let d12 = quaternion_group(&[Quat::xi(6, 1), Quat::j()]).unwrap();
        assert_eq!(recognize(&d12).unwrap(), GroupIsoType::BinaryDihedral(12));
        let c3q8 = TableGroup::direct_product(&TableGroup::cyclic(3), &GroupIsoType::Q8.model().unwrap());
        assert_eq!(recognize_table(&c3q8, 1000).unwrap().to_string(), "C3×Q8");
    }

    #[test]
    fn abelianizations() {
        let t24 = quaternion_group(&[Quat::j(), constants::octa_y()]).unwrap();
        assert_eq!(abelianization(&t24).unwrap(), GroupIsoType::Cyclic(3));
        let q8 = quaternion_group(&[Quat::i(), Quat::j()]).unwrap();
        assert_eq!(abelianization(&q8).unwrap(), GroupIsoType::KleinFour);
        assert_eq!(abelianization_table(&TableGroup::cyclic(7)), GroupIsoType::Cyclic(7));
    }

    #[test]
    fn outer_automorphisms() {
        let q8 = quaternion_group(&[Quat::i(), Quat::j()]).unwrap();
        assert_eq!(outer_automorphism_order(&q8).unwrap(), 6);
        let t24 = quaternion_group(&[Quat::j(), constants::octa_y()]).unwrap();
        assert_eq!(outer_automorphism_order(&t24).unwrap(), 2);
    }

    #[test]
    fn conjugation_automorphisms() {
        let q8 = quaternion_group(&[Quat::i(), Quat::j()]).unwrap();
        let inner = automorphism_from_conjugation(&left(Quat::i()), &q8).unwrap();
        assert!(is_inner(&inner));
        // (1+i)/√2 fixes i and sends j to ±k
        let s = constants::inv_sqrt2();
        let w = left(Quat::new(s.clone(), crate::Cyc::from_int(0)).mul(&Quat::new(
            crate::Cyc::from_int(1) + crate::Cyc::root_of_unity(4, 1),
            crate::Cyc::from_int(0),
        )));
        let outer = automorphism_from_conjugation(&w, &q8).unwrap();
        assert!(!is_inner(&outer));
    }

    #[test]
    fn quotients() {
        let o48 = quaternion_group(&[constants::octa_x(), constants::octa_y()]).unwrap();
        let t24 = quaternion_group(&[Quat::j(), constants::octa_y()]).unwrap();
        let q8 = quaternion_group(&[Quat::i(), Quat::j()]).unwrap();
        assert_eq!(recognize_table(&quotient_group(&o48, &t24).unwrap(), 1000).unwrap(), GroupIsoType::Cyclic(2));
        assert_eq!(recognize_table(&quotient_group(&o48, &q8).unwrap(), 1000).unwrap(), GroupIsoType::SymmetricS3);
    }
}
