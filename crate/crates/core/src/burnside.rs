//! The Burnside ring A(G) of a finite permutation group.
//!
//! Elements are integer combinations of the transitive G-sets `[G/H]`, one
//! coordinate per conjugacy class of subgroups. Marks (fixed-point counts)
//! come from a table of marks computed once per group; equality of elements
//! is decided on marks and agrees with equality of coefficients.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::permgroup::{subgroup_classes, IndexedGroup, PermGroup, Permutation, SubgroupClass};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("elements live in Burnside rings of different groups ({0} vs {1})")]
    AmbientMismatch(String, String),
    #[error("subgroup class {0} does not belong to this Burnside ring")]
    ForeignClass(usize),
    #[error("{0} is not a subgroup of {1}")]
    NotASubgroup(String, String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("mark vector {0:?} is not the mark vector of an element of A(G)")]
    NonIntegral(Vec<i64>),
}

/// `marks[h][k] = |(G/H)^K|`, rows and columns in canonical class order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableOfMarks {
    marks: Vec<Vec<i64>>,
}

impl TableOfMarks {
    pub fn get(&self, h: usize, k: usize) -> i64 {
        self.marks[h][k]
    }

    pub fn size(&self) -> usize {
        self.marks.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.marks
    }
}

/// Subgroup classes, table of marks and a subgroup lookup for one group.
pub struct BurnsideRing {
    group: PermGroup,
    classes: Vec<SubgroupClass>,
    table: TableOfMarks,
    lookup: HashMap<u64, usize>,
}

impl fmt::Debug for BurnsideRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({})", self.group.name())
    }
}

impl BurnsideRing {
    pub fn new(group: PermGroup) -> Arc<Self> {
        let classes = subgroup_classes(&group);
        let ig = IndexedGroup::new(&group);
        let masks: Vec<Vec<u64>> = classes
            .iter()
            .map(|c| {
                c.members
                    .iter()
                    .map(|m| ig.group_to_mask(m).expect("member inside ambient group"))
                    .collect()
            })
            .collect();
        let mut lookup = HashMap::new();
        for (i, ms) in masks.iter().enumerate() {
            for &m in ms {
                lookup.insert(m, i);
            }
        }
        let n = classes.len();
        let mut marks = vec![vec![0i64; n]; n];
        for (hi, hclass) in classes.iter().enumerate() {
            let hmask = masks[hi][0];
            for (ki, _) in classes.iter().enumerate() {
                let kmask = masks[ki][0];
                // cosets gH with K ⊆ gHg⁻¹, i.e. g⁻¹Kg ⊆ H
                let count = (0..group.order())
                    .filter(|&g| {
                        let conj = ig.conjugate_mask(kmask, ig.inv[g]);
                        conj & hmask == conj
                    })
                    .count();
                marks[hi][ki] = (count / hclass.order()) as i64;
            }
        }
        Arc::new(BurnsideRing {
            group,
            classes,
            table: TableOfMarks { marks },
            lookup,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn table_of_marks(&self) -> &TableOfMarks {
        &self.table
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    pub fn whole_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// Conjugacy class of a subgroup of the ambient group.
    pub fn class_of(&self, sub: &PermGroup) -> Option<usize> {
        if sub.degree() != self.group.degree() {
            return None;
        }
        let mut mask = 0u64;
        for e in sub.elements() {
            mask |= 1u64 << self.group.index_of(e)?;
        }
        self.lookup.get(&mask).copied()
    }

    /// Display label of a class: `G` for the whole group, otherwise the
    /// generators of its representative.
    pub fn class_label(&self, class: usize) -> String {
        if class == self.whole_class() {
            "G".to_string()
        } else {
            self.classes[class].representative.name()
        }
    }

    /// Label of a concrete subgroup, `G` for the whole group.
    pub fn subgroup_label(&self, sub: &PermGroup) -> String {
        if *sub == self.group {
            "G".to_string()
        } else {
            sub.name()
        }
    }

    pub fn same_as(&self, other: &BurnsideRing) -> bool {
        std::ptr::eq(self, other) || self.group == other.group
    }
}

/// A virtual G-set `Σ nᵢ [G/Hᵢ]`.
#[derive(Clone)]
pub struct BurnsideElement {
    ring: Arc<BurnsideRing>,
    coeffs: Vec<i64>,
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for BurnsideElement {}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &n) in self.coeffs.iter().enumerate().rev() {
            if n == 0 {
                continue;
            }
            let term = format!("[G/{}]", self.ring.class_label(i));
            let abs = n.abs();
            let body = if abs == 1 { term } else { format!("{abs}*{term}") };
            match (first, n < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// One row of a mark comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkRow {
    pub class_index: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// Marks of two elements on every subgroup class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkComparison {
    pub rows: Vec<MarkRow>,
}

impl MarkComparison {
    pub fn equal(&self) -> bool {
        self.rows.iter().all(|r| r.lhs == r.rhs)
    }

    /// Classes on which the marks differ.
    pub fn witnesses(&self) -> Vec<&MarkRow> {
        self.rows.iter().filter(|r| r.lhs != r.rhs).collect()
    }
}

#[derive(Serialize)]
struct CoeffJson {
    class: String,
    n: i64,
}

#[derive(Serialize)]
struct ElementJson {
    ambient: String,
    coeffs: Vec<CoeffJson>,
}

impl BurnsideElement {
    pub fn zero(ring: &Arc<BurnsideRing>) -> Self {
        BurnsideElement {
            ring: ring.clone(),
            coeffs: vec![0; ring.rank()],
        }
    }

    /// `[G/H]` for the class with the given index.
    pub fn basis(ring: &Arc<BurnsideRing>, class: usize) -> Self {
        let mut x = BurnsideElement::zero(ring);
        x.coeffs[class] = 1;
        x
    }

    /// The one-point set `{*}`, the unit of the ring.
    pub fn one(ring: &Arc<BurnsideRing>) -> Self {
        BurnsideElement::basis(ring, ring.whole_class())
    }

    /// `[G/H]` for a concrete subgroup `H`.
    pub fn orbit_type(ring: &Arc<BurnsideRing>, sub: &PermGroup) -> Result<Self, BurnsideError> {
        let class = ring.class_of(sub).ok_or_else(|| {
            BurnsideError::NotASubgroup(sub.name(), ring.group().name())
        })?;
        Ok(BurnsideElement::basis(ring, class))
    }

    pub fn from_coeffs(ring: &Arc<BurnsideRing>, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), ring.rank(), "coefficient vector has wrong length");
        BurnsideElement {
            ring: ring.clone(),
            coeffs,
        }
    }

    /// Solves `Σ_H c_H M[H][K] = marks[K]` by back substitution.
    pub fn from_marks(ring: &Arc<BurnsideRing>, marks: &[i64]) -> Result<Self, BurnsideError> {
        let n = ring.rank();
        assert_eq!(marks.len(), n);
        let table = ring.table_of_marks();
        let mut coeffs = vec![0i64; n];
        for k in (0..n).rev() {
            let partial: i64 = ((k + 1)..n).map(|h| coeffs[h] * table.get(h, k)).sum();
            let rest = marks[k] - partial;
            let diag = table.get(k, k);
            if rest % diag != 0 {
                return Err(BurnsideError::NonIntegral(marks.to_vec()));
            }
            coeffs[k] = rest / diag;
        }
        Ok(BurnsideElement {
            ring: ring.clone(),
            coeffs,
        })
    }

    pub fn ring(&self) -> &Arc<BurnsideRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, class: usize) -> i64 {
        self.coeffs[class]
    }

    pub fn is_genuine(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Number of fixed points of the class `k` subgroups.
    pub fn marks(&self, k: usize) -> Result<i64, BurnsideError> {
        if k >= self.ring.rank() {
            return Err(BurnsideError::ForeignClass(k));
        }
        let t = self.ring.table_of_marks();
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .map(|(h, &c)| c * t.get(h, k))
            .sum())
    }

    /// Marks of a concrete subgroup of the ambient group.
    pub fn marks_of(&self, sub: &PermGroup) -> Result<i64, BurnsideError> {
        let k = self.ring.class_of(sub).ok_or_else(|| {
            BurnsideError::NotASubgroup(sub.name(), self.ring.group().name())
        })?;
        self.marks(k)
    }

    pub fn mark_vector(&self) -> Vec<i64> {
        (0..self.ring.rank()).map(|k| self.marks(k).unwrap()).collect()
    }

    /// Cardinality of the underlying (virtual) set.
    pub fn cardinality(&self) -> i64 {
        self.marks(self.ring.trivial_class()).unwrap()
    }

    fn check_same(&self, other: &Self) -> Result<(), BurnsideError> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(BurnsideError::AmbientMismatch(
                self.ring.group().name(),
                other.ring.group().name(),
            ))
        }
    }

    /// Compares marks on every subgroup class.
    pub fn compare(&self, other: &Self) -> Result<MarkComparison, BurnsideError> {
        self.check_same(other)?;
        let rows = (0..self.ring.rank())
            .map(|k| MarkRow {
                class_index: k,
                lhs: self.marks(k).unwrap(),
                rhs: other.marks(k).unwrap(),
            })
            .collect();
        Ok(MarkComparison { rows })
    }

    /// Equality in A(G), decided on marks.
    pub fn equals(&self, other: &Self) -> Result<bool, BurnsideError> {
        Ok(self.compare(other)?.equal())
    }

    pub fn add(&self, other: &Self) -> Result<Self, BurnsideError> {
        self.check_same(other)?;
        Ok(BurnsideElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, BurnsideError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BurnsideElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        BurnsideElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Product in A(G): marks multiply pointwise.
    pub fn mul(&self, other: &Self) -> Result<Self, BurnsideError> {
        self.check_same(other)?;
        let marks: Vec<i64> = self
            .mark_vector()
            .iter()
            .zip(other.mark_vector())
            .map(|(a, b)| a * b)
            .collect();
        BurnsideElement::from_marks(&self.ring, &marks)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &n)| n != 0)
            .map(|(i, &n)| CoeffJson {
                class: self.ring.class_label(i),
                n,
            })
            .collect();
        serde_json::to_value(ElementJson {
            ambient: self.ring.group().name(),
            coeffs,
        })
        .expect("plain data serializes")
    }
}

/// A finite G-set given by its full action table.
#[derive(Clone, Debug)]
pub struct ConcreteGSet {
    group: PermGroup,
    /// `table[g][x]` = g·x, `g` indexing `group.elements()`.
    table: Vec<Vec<usize>>,
}

impl ConcreteGSet {
    /// Tabulates `act` on points `0..size` and checks the action axioms on
    /// every pair of group elements.
    pub fn new<F>(group: &PermGroup, size: usize, act: F) -> Result<Self, BurnsideError>
    where
        F: Fn(&Permutation, usize) -> usize,
    {
        let table: Vec<Vec<usize>> = group
            .elements()
            .iter()
            .map(|g| (0..size).map(|x| act(g, x)).collect())
            .collect();
        let set = ConcreteGSet {
            group: group.clone(),
            table,
        };
        set.validate()?;
        Ok(set)
    }

    fn validate(&self) -> Result<(), BurnsideError> {
        let size = self.size();
        let g = &self.group;
        for row in &self.table {
            if row.iter().any(|&y| y >= size) {
                return Err(BurnsideError::InvalidAction("image out of range".into()));
            }
        }
        let id = g.index_of(&g.identity()).unwrap();
        if (0..size).any(|x| self.table[id][x] != x) {
            return Err(BurnsideError::InvalidAction("identity acts nontrivially".into()));
        }
        for (a, pa) in g.elements().iter().enumerate() {
            for (b, pb) in g.elements().iter().enumerate() {
                let ab = g.index_of(&(pa * pb)).unwrap();
                for x in 0..size {
                    if self.table[ab][x] != self.table[a][self.table[b][x]] {
                        return Err(BurnsideError::InvalidAction(format!(
                            "({pa}{pb})·{x} differs from ({pa})·(({pb})·{x})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `G/H` on left cosets, listed in the order of `PermGroup::left_cosets`.
    pub fn cosets(group: &PermGroup, sub: &PermGroup) -> Result<Self, BurnsideError> {
        if !sub.is_subgroup_of(group) {
            return Err(BurnsideError::NotASubgroup(sub.name(), group.name()));
        }
        let cosets = group.left_cosets(sub);
        let locate = |p: &Permutation| cosets.iter().position(|c| c.binary_search(p).is_ok()).unwrap();
        let table = group
            .elements()
            .iter()
            .map(|g| cosets.iter().map(|c| locate(&(g * &c[0]))).collect())
            .collect();
        Ok(ConcreteGSet {
            group: group.clone(),
            table,
        })
    }

    /// Single-point set `{*}`.
    pub fn point(group: &PermGroup) -> Self {
        ConcreteGSet {
            group: group.clone(),
            table: vec![vec![0]; group.order()],
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.table.first().map_or(0, |r| r.len())
    }

    pub fn act(&self, g: &Permutation, x: usize) -> usize {
        let gi = self.group.index_of(g).expect("element of the acting group");
        self.table[gi][x]
    }

    pub fn disjoint_union(&self, other: &Self) -> Result<Self, BurnsideError> {
        if self.group != other.group {
            return Err(BurnsideError::AmbientMismatch(self.group.name(), other.group.name()));
        }
        let n = self.size();
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|y| y + n)).collect())
            .collect();
        Ok(ConcreteGSet {
            group: self.group.clone(),
            table,
        })
    }

    /// Cartesian product with the diagonal action; `(x, y)` is point `x * |T| + y`.
    pub fn product(&self, other: &Self) -> Result<Self, BurnsideError> {
        if self.group != other.group {
            return Err(BurnsideError::AmbientMismatch(self.group.name(), other.group.name()));
        }
        let m = other.size();
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| {
                (0..self.size() * m)
                    .map(|p| a[p / m] * m + b[p % m])
                    .collect()
            })
            .collect();
        Ok(ConcreteGSet {
            group: self.group.clone(),
            table,
        })
    }

    /// Renames point `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.size();
        let mut inv = vec![0; n];
        for (x, &y) in perm.iter().enumerate() {
            inv[y] = x;
        }
        let table = self
            .table
            .iter()
            .map(|row| (0..n).map(|y| perm[row[inv[y]]]).collect())
            .collect();
        ConcreteGSet {
            group: self.group.clone(),
            table,
        }
    }

    pub fn fixed_points(&self, sub: &PermGroup) -> usize {
        (0..self.size())
            .filter(|&x| sub.elements().iter().all(|h| self.act(h, x) == x))
            .count()
    }

    /// Orbits, each listed from its smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = self.table.iter().map(|row| row[x]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn stabilizer(&self, x: usize) -> PermGroup {
        let els = self
            .group
            .elements()
            .iter()
            .zip(&self.table)
            .filter(|(_, row)| row[x] == x)
            .map(|(g, _)| g.clone())
            .collect();
        PermGroup::from_closed_elements(self.group.degree(), els)
    }
}

/// Class of a concrete G-set in A(G): one `[G/Stab(x)]` per orbit.
pub fn decompose(ring: &Arc<BurnsideRing>, set: &ConcreteGSet) -> Result<BurnsideElement, BurnsideError> {
    if *set.group() != *ring.group() {
        return Err(BurnsideError::AmbientMismatch(set.group().name(), ring.group().name()));
    }
    let mut x = BurnsideElement::zero(ring);
    for orbit in set.orbits() {
        let stab = set.stabilizer(orbit[0]);
        let class = ring
            .class_of(&stab)
            .expect("stabilizers are subgroups of the ambient group");
        x.coeffs[class] += 1;
    }
    Ok(x)
}

/// Inflation from a subgroup: `[H/K] ↦ [G/K]`, extended linearly.
pub fn inflate(target: &Arc<BurnsideRing>, x: &BurnsideElement) -> Result<BurnsideElement, BurnsideError> {
    let sub = x.ring.group();
    if !sub.is_subgroup_of(target.group()) {
        return Err(BurnsideError::NotASubgroup(sub.name(), target.group().name()));
    }
    let mut out = BurnsideElement::zero(target);
    for (i, &n) in x.coeffs.iter().enumerate() {
        if n == 0 {
            continue;
        }
        let k = &x.ring.classes()[i].representative;
        let class = target.class_of(k).expect("subgroup of a subgroup");
        out.coeffs[class] += n;
    }
    Ok(out)
}
