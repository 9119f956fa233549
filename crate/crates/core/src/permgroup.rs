//! Finite permutation groups on a handful of points.
//!
//! Permutations are stored as image arrays on `0..degree`; cycle notation
//! (1-based, as in `(12)(34)`) is only used for parsing and printing.
//! Composition applies the right factor first: `(p * q)(i) = p(q(i))`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image list {0:?} is not a bijection")]
    NotABijection(Vec<usize>),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("action axiom violated: {0}")]
    NotAnAction(String),
    #[error("{0} is not an element of the group")]
    NotAnElement(String),
}

/// A permutation of `0..degree`, stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || used[a] {
                    return Err(PermError::Parse {
                        input: format!("{cycles:?}"),
                        reason: format!("point {} repeated or out of range", a + 1),
                    });
                }
                used[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses cycle notation with 1-based points, e.g. `"(1 2)(3 4)"`,
    /// `"(12)(34)"` or `"()"`. The compact form (no separators) treats each
    /// digit as a point and is only accepted for `degree <= 9`.
    pub fn parse(input: &str, degree: usize) -> Result<Self, PermError> {
        let err = |reason: &str| PermError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s = input.trim();
        if s.is_empty() {
            return Err(err("empty input"));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(err("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| err("unbalanced parenthesis"))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            let tokens: Vec<&str> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect();
            let points: Vec<usize> = if tokens.len() == 1 && tokens[0].len() > 1 {
                if degree > 9 {
                    return Err(err("compact cycle notation requires degree <= 9"));
                }
                tokens[0]
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| err("bad digit")))
                    .collect::<Result<_, _>>()?
            } else {
                tokens
                    .iter()
                    .map(|t| t.parse::<usize>().map_err(|_| err("bad point")))
                    .collect::<Result<_, _>>()?
            };
            if points.iter().any(|&p| p == 0 || p > degree) {
                return Err(err("point out of range"));
            }
            if !points.is_empty() {
                cycles.push(points.into_iter().map(|p| p - 1).collect());
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Permutation::from_cycles(degree, &refs).map_err(|_| err("repeated point"))
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = &p * self;
            k += 1;
        }
        k
    }

    /// `self * other * self⁻¹`.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        &(self * other) * &self.inverse()
    }

    /// Number of points moved.
    pub fn support_size(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i != j).count()
    }

    /// Nontrivial cycles, 0-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "composing permutations of different degree");
        Permutation {
            images: rhs.images.iter().map(|&i| self.images[i]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        let sep = if self.degree() <= 9 { "" } else { " " };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite group of permutations, with its elements in sorted order.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl std::hash::Hash for PermGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, {})", self.order(), self.name())
    }
}

impl PermGroup {
    /// Closure of `generators` under composition.
    pub fn generate(generators: &[Permutation], degree: usize) -> Result<Self, PermError> {
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(h) = queue.pop_front() {
            for g in generators {
                let gh = g * &h;
                if seen.insert(gh.clone()) {
                    queue.push_back(gh);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(PermGroup {
            degree,
            elements,
            generators: generators.to_vec(),
        })
    }

    /// Parses a comma separated generator list such as `"(12),(34)"`,
    /// optionally wrapped in angle brackets.
    pub fn parse_generators(input: &str, degree: usize) -> Result<Self, PermError> {
        let s = input.trim();
        let s = s.strip_prefix('<').unwrap_or(s);
        let s = s.strip_suffix('>').unwrap_or(s);
        let mut gens = Vec::new();
        let mut depth = 0usize;
        let mut current = String::new();
        for ch in s.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    current.push(ch);
                }
                ')' => {
                    depth = depth.saturating_sub(1);
                    current.push(ch);
                }
                ',' if depth == 0 => {
                    if !current.trim().is_empty() {
                        gens.push(Permutation::parse(&current, degree)?);
                    }
                    current.clear();
                }
                _ => current.push(ch),
            }
        }
        if !current.trim().is_empty() {
            gens.push(Permutation::parse(&current, degree)?);
        }
        PermGroup::generate(&gens, degree)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::generate(&[], degree).expect("empty generator list")
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[&[0, 1]]).unwrap());
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).unwrap());
        }
        PermGroup::generate(&gens, degree).unwrap()
    }

    /// Builds a group directly from a list of elements already known to be
    /// closed under composition.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(elements.iter().any(|e| e.is_identity()));
        let generators = small_generating_set(&elements, degree);
        PermGroup {
            degree,
            elements,
            generators,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.index_of(p).is_some()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a * b == b * a))
    }

    /// `g H g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> PermGroup {
        let elements = self.elements.iter().map(|h| g.conjugate(h)).collect();
        PermGroup::from_closed_elements(self.degree, elements)
    }

    /// Left cosets `gH` of `sub` in `self`, each sorted, listed in order of
    /// their smallest element.
    pub fn left_cosets(&self, sub: &PermGroup) -> Vec<Vec<Permutation>> {
        let mut covered: HashSet<Permutation> = HashSet::new();
        let mut cosets = Vec::new();
        for g in &self.elements {
            if covered.contains(g) {
                continue;
            }
            let mut coset: Vec<Permutation> = sub.elements.iter().map(|h| g * h).collect();
            coset.sort();
            covered.extend(coset.iter().cloned());
            cosets.push(coset);
        }
        cosets
    }

    /// A short human readable name: the generating set in angle brackets.
    pub fn name(&self) -> String {
        if self.generators_for_display().is_empty() {
            return "<()>".to_string();
        }
        let gens: Vec<String> = self
            .generators_for_display()
            .iter()
            .map(|g| g.to_string())
            .collect();
        format!("<{}>", gens.join(","))
    }

    fn generators_for_display(&self) -> Vec<Permutation> {
        small_generating_set(&self.elements, self.degree)
    }

    /// Isomorphism type of the group, guessed from its order and element
    /// orders. Exact for every group of order at most 24 that embeds in S4.
    pub fn abstract_type(&self) -> String {
        let n = self.order();
        let mut order_counts: HashMap<usize, usize> = HashMap::new();
        for e in &self.elements {
            *order_counts.entry(e.order()).or_default() += 1;
        }
        let max_order = order_counts.keys().copied().max().unwrap_or(1);
        let abelian = self.is_abelian();
        match n {
            1 => "1".to_string(),
            _ if max_order == n => format!("Z{n}"),
            4 => "Z2xZ2".to_string(),
            6 => "S3".to_string(),
            8 if abelian && max_order == 4 => "Z4xZ2".to_string(),
            8 if abelian => "Z2xZ2xZ2".to_string(),
            8 if order_counts.get(&2).copied().unwrap_or(0) == 5 => "D8".to_string(),
            8 => "Q8".to_string(),
            12 if max_order == 3 => "A4".to_string(),
            24 if max_order == 4 && order_counts.get(&3).copied() == Some(8) => "S4".to_string(),
            _ => format!("G{n}"),
        }
    }
}

/// Greedy generating set: larger element orders first, then fewer moved
/// points, then by cycle notation.
fn small_generating_set(elements: &[Permutation], degree: usize) -> Vec<Permutation> {
    let mut candidates: Vec<&Permutation> = elements.iter().filter(|e| !e.is_identity()).collect();
    candidates.sort_by_key(|e| (std::cmp::Reverse(e.order()), e.support_size(), e.to_string()));
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for c in candidates {
        if current.len() == elements.len() {
            break;
        }
        if current.contains(c) {
            continue;
        }
        gens.push(c.clone());
        current = PermGroup::generate(&gens, degree)
            .expect("same degree")
            .elements
            .into_iter()
            .collect();
    }
    gens
}

/// One conjugacy class of subgroups of an ambient group.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: PermGroup,
    pub members: Vec<PermGroup>,
    pub class_index: usize,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }

    pub fn contains(&self, sub: &PermGroup) -> bool {
        self.members.iter().any(|m| m == sub)
    }
}

/// Element indices of `group`, with a multiplication table, so that
/// subgroups can be handled as bitmasks.
pub(crate) struct IndexedGroup<'a> {
    pub group: &'a PermGroup,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl<'a> IndexedGroup<'a> {
    pub fn new(group: &'a PermGroup) -> Self {
        assert!(
            group.order() <= 64,
            "subgroup lattice computations support groups of order <= 64 (got {})",
            group.order()
        );
        let els = group.elements();
        let mul = els
            .iter()
            .map(|a| {
                els.iter()
                    .map(|b| group.index_of(&(a * b)).expect("closed under composition"))
                    .collect()
            })
            .collect();
        let inv = els
            .iter()
            .map(|a| group.index_of(&a.inverse()).expect("closed under inverse"))
            .collect();
        IndexedGroup { group, mul, inv }
    }

    pub fn identity_index(&self) -> usize {
        self.group.index_of(&self.group.identity()).unwrap()
    }

    pub fn closure(&self, seed: u64) -> u64 {
        let mut mask = seed | (1u64 << self.identity_index());
        loop {
            let mut next = mask;
            let members: Vec<usize> = bits(mask).collect();
            for &a in &members {
                for &b in &members {
                    next |= 1u64 << self.mul[a][b];
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    pub fn conjugate_mask(&self, mask: u64, g: usize) -> u64 {
        bits(mask).fold(0u64, |acc, h| acc | (1u64 << self.mul[self.mul[g][h]][self.inv[g]]))
    }

    pub fn mask_to_group(&self, mask: u64) -> PermGroup {
        let els = bits(mask).map(|i| self.group.elements()[i].clone()).collect();
        PermGroup::from_closed_elements(self.group.degree(), els)
    }

    pub fn group_to_mask(&self, sub: &PermGroup) -> Option<u64> {
        let mut mask = 0u64;
        for e in sub.elements() {
            mask |= 1u64 << self.group.index_of(e)?;
        }
        Some(mask)
    }

    /// All subgroups, as masks: joins of cyclic subgroups until stable.
    pub fn all_subgroups(&self) -> Vec<u64> {
        let n = self.group.order();
        let cyclic: Vec<u64> = {
            let mut v: Vec<u64> = (0..n).map(|i| self.closure(1u64 << i)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut all: HashSet<u64> = cyclic.iter().copied().collect();
        let mut frontier: Vec<u64> = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &a in &frontier {
                for &c in &cyclic {
                    if a | c == a {
                        continue;
                    }
                    let j = self.closure(a | c);
                    if all.insert(j) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut v: Vec<u64> = all.into_iter().collect();
        v.sort_unstable();
        v
    }
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1u64 << i) != 0)
}

/// All subgroups of `group` up to conjugacy, ordered by subgroup order and
/// then by the sorted element list of the class representative (which is
/// itself the lexicographically least member of the class).
pub fn subgroup_classes(group: &PermGroup) -> Vec<SubgroupClass> {
    let ig = IndexedGroup::new(group);
    let all = ig.all_subgroups();
    let mut assigned: HashSet<u64> = HashSet::new();
    let mut classes: Vec<(PermGroup, Vec<PermGroup>)> = Vec::new();
    for &h in &all {
        if assigned.contains(&h) {
            continue;
        }
        let mut conj: Vec<u64> = (0..group.order()).map(|g| ig.conjugate_mask(h, g)).collect();
        conj.sort_unstable();
        conj.dedup();
        let mut members: Vec<PermGroup> = conj
            .iter()
            .map(|&m| {
                assigned.insert(m);
                ig.mask_to_group(m)
            })
            .collect();
        members.sort_by(|a, b| a.elements().cmp(b.elements()));
        let rep = members[0].clone();
        classes.push((rep, members));
    }
    classes.sort_by(|(a, _), (b, _)| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    classes
        .into_iter()
        .enumerate()
        .map(|(class_index, (representative, members))| SubgroupClass {
            representative,
            members,
            class_index,
        })
        .collect()
}

/// Orbit of `x` under `group` (in breadth-first order from `x`) together
/// with its stabilizer. The action axioms are checked on the orbit.
pub fn orbit_and_stabilizer<X, F>(
    group: &PermGroup,
    action: F,
    x: &X,
) -> Result<(Vec<X>, PermGroup), PermError>
where
    X: Clone + Eq + std::hash::Hash + fmt::Debug,
    F: Fn(&Permutation, &X) -> X,
{
    let id = group.identity();
    let mut orbit = vec![x.clone()];
    let mut index: HashMap<X, usize> = HashMap::from([(x.clone(), 0)]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for g in group.elements() {
            let z = action(g, &y);
            if !index.contains_key(&z) {
                index.insert(z.clone(), orbit.len());
                orbit.push(z.clone());
                queue.push_back(z);
            }
        }
    }

    // Full check of identity and compatibility on the orbit, sampled once
    // the cube gets large.
    let els = group.elements();
    let budget = 200_000usize;
    let total = els.len() * els.len() * orbit.len();
    let stride = (total / budget).max(1);
    let mut counter = 0usize;
    for y in &orbit {
        if action(&id, y) != *y {
            return Err(PermError::NotAnAction(format!("identity moves {y:?}")));
        }
        for g in els {
            for h in els {
                counter += 1;
                if !counter.is_multiple_of(stride) {
                    continue;
                }
                let lhs = action(&(g * h), y);
                let rhs = action(g, &action(h, y));
                if lhs != rhs {
                    return Err(PermError::NotAnAction(format!(
                        "({g})({h})·{y:?} = {lhs:?} but ({g})·(({h})·{y:?}) = {rhs:?}"
                    )));
                }
            }
        }
    }

    let stab: Vec<Permutation> = els.iter().filter(|g| action(g, x) == *x).cloned().collect();
    let stab = PermGroup::from_closed_elements(group.degree(), stab);
    Ok((orbit, stab))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, 4).unwrap()
    }

    fn gen(gens: &[&str]) -> PermGroup {
        let g: Vec<Permutation> = gens.iter().map(|s| p(s)).collect();
        PermGroup::generate(&g, 4).unwrap()
    }

    #[test]
    fn parse_and_print_cycles() {
        assert_eq!(p("(1 2)(3 4)"), p("(12)(34)"));
        assert_eq!(p("(12)(34)").to_string(), "(12)(34)");
        assert_eq!(p("()").to_string(), "()");
        assert_eq!(p("(1234)").images(), &[1, 2, 3, 0]);
        assert!(Permutation::parse("(15)", 4).is_err());
        assert!(Permutation::parse("(11)", 4).is_err());
        assert!(Permutation::parse("12", 4).is_err());
        let big = Permutation::parse("(1 10)", 10).unwrap();
        assert_eq!(big.to_string(), "(1 10)");
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (13)(14)(23) = (1432)
        assert_eq!(&p("(13)") * &p("(14)(23)"), p("(1432)"));
        // (1234)(13) = (14)(23)
        assert_eq!(&p("(1234)") * &p("(13)"), p("(14)(23)"));
        let x = p("(1243)");
        assert!((&x * &x.inverse()).is_identity());
    }

    #[test]
    fn generated_orders() {
        assert_eq!(gen(&["(12)", "(123)"]).order(), 6);
        assert_eq!(gen(&[]).order(), 1);
        assert_eq!(gen(&["(1234)", "(13)"]).order(), 8);
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        let err = PermGroup::generate(&[p("(12)"), Permutation::identity(3)], 4);
        assert!(matches!(err, Err(PermError::DegreeMismatch { .. })));
    }

    #[test]
    fn s4_has_eleven_subgroup_classes() {
        let s4 = PermGroup::symmetric(4);
        let classes = subgroup_classes(&s4);
        assert_eq!(classes.len(), 11);
        let total: usize = classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 30);
        let orders: Vec<usize> = classes.iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24]);
    }

    #[test]
    fn d8_transposition_and_double_transposition_classes_differ() {
        let d8 = gen(&["(1234)", "(13)"]);
        let classes = subgroup_classes(&d8);
        assert_eq!(classes.len(), 8);
        let a = gen(&["(13)"]);
        let b = gen(&["(14)(23)"]);
        let ca = classes.iter().position(|c| c.contains(&a)).unwrap();
        let cb = classes.iter().position(|c| c.contains(&b)).unwrap();
        assert_ne!(ca, cb);
        // (13) and (24) are conjugate in D8.
        assert!(classes[ca].contains(&gen(&["(24)"])));
    }

    #[test]
    fn trivial_group_has_one_class() {
        assert_eq!(subgroup_classes(&PermGroup::trivial(4)).len(), 1);
    }

    #[test]
    fn classes_independent_of_presentation() {
        let a = gen(&["(1234)", "(12)"]);
        let b = gen(&["(12)", "(23)", "(34)"]);
        let ca = subgroup_classes(&a);
        let cb = subgroup_classes(&b);
        assert_eq!(ca.len(), cb.len());
        for (x, y) in ca.iter().zip(&cb) {
            assert_eq!(x.representative, y.representative);
            assert_eq!(x.members, y.members);
        }
    }

    #[test]
    fn subgroups_closed_under_conjugation() {
        let s4 = PermGroup::symmetric(4);
        let classes = subgroup_classes(&s4);
        let all: Vec<&PermGroup> = classes.iter().flat_map(|c| c.members.iter()).collect();
        for h in &all {
            for g in s4.elements() {
                let c = h.conjugate_by(g);
                assert!(all.iter().any(|k| **k == c));
            }
        }
    }

    #[test]
    fn orbit_stabilizer_examples() {
        let a4 = gen(&["(123)", "(12)(34)"]);
        // act on the 2-subset {1,2} (0-based {0,1}) of points
        let act = |g: &Permutation, s: &(usize, usize)| {
            let (a, b) = (g.apply(s.0), g.apply(s.1));
            (a.min(b), a.max(b))
        };
        let (orbit, stab) = orbit_and_stabilizer(&a4, act, &(0, 1)).unwrap();
        assert_eq!(orbit.len() * stab.order(), 12);
        assert_eq!(orbit.len(), 6);

        let triv = PermGroup::trivial(4);
        let (orbit, stab) = orbit_and_stabilizer(&triv, act, &(0, 1)).unwrap();
        assert_eq!(orbit, vec![(0, 1)]);
        assert_eq!(stab, triv);
    }

    #[test]
    fn orbit_stabilizer_rejects_non_actions() {
        let z2 = gen(&["(12)"]);
        // right multiplication by a fixed element is not a left action of Z2 on points
        let bad = |g: &Permutation, x: &usize| if g.is_identity() { *x } else { (*x + 1) % 3 };
        assert!(matches!(
            orbit_and_stabilizer(&z2, bad, &0),
            Err(PermError::NotAnAction(_))
        ));
    }

    #[test]
    fn abstract_types() {
        assert_eq!(gen(&["(12)(34)", "(13)(24)"]).abstract_type(), "Z2xZ2");
        assert_eq!(gen(&["(12)", "(34)"]).abstract_type(), "Z2xZ2");
        assert_eq!(gen(&["(1234)"]).abstract_type(), "Z4");
        assert_eq!(gen(&["(1234)", "(13)"]).abstract_type(), "D8");
        assert_eq!(gen(&["(123)", "(12)(34)"]).abstract_type(), "A4");
        assert_eq!(PermGroup::symmetric(4).abstract_type(), "S4");
        assert_eq!(gen(&["(123)", "(12)"]).abstract_type(), "S3");
    }

    #[test]
    fn names_use_small_generating_sets() {
        assert_eq!(gen(&["(13)(24)", "(12)(34)"]).name(), "<(12)(34),(13)(24)>");
        assert_eq!(gen(&["(1234)", "(13)"]).name(), "<(1234),(13)>");
        assert_eq!(PermGroup::trivial(4).name(), "<()>");
    }

    #[test]
    fn left_cosets_partition() {
        let s3 = gen(&["(123)", "(12)"]);
        let h = gen(&["(12)"]);
        let cosets = s3.left_cosets(&h);
        assert_eq!(cosets.len(), 3);
        assert_eq!(cosets[0][0], Permutation::identity(4));
    }
}
