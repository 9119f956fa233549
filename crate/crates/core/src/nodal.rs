//! Weighted counts of nodal orbits.
//!
//! A general pencil of conics has four base points `b1..b4`; its three
//! nodal members are the line pairs through them, which correspond to the
//! three ways of splitting `{1,2,3,4}` into two pairs. A group acting on
//! the base points acts on these pairings, and each orbit of nodal conics
//! gets a weight in A(G): the branch set of a representative as a virtual
//! set over its stabilizer, minus a point, inflated to G. This module sums
//! those weights and compares them with `[Σ] - {*}`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::burnside::{decompose, inflate, BurnsideElement, BurnsideError, BurnsideRing, ConcreteGSet};
use crate::permgroup::{orbit_and_stabilizer, PermError, PermGroup, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NodalError {
    #[error("point action is not a homomorphism into S4: {0}")]
    NotAHomomorphism(String),
    #[error("orbit types add up to {0} points, expected 4")]
    WrongCardinality(usize),
    #[error("cannot parse sigma spec {spec:?}: {reason}")]
    SigmaSpec { spec: String, reason: String },
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// One of the three partitions of `{1,2,3,4}` into two pairs, identified by
/// the partner of point 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    partner: u8,
}

impl Pairing {
    pub const ALL: [Pairing; 3] = [
        Pairing { partner: 1 },
        Pairing { partner: 2 },
        Pairing { partner: 3 },
    ];

    /// The two blocks, 0-based, each sorted, first block containing 0.
    pub fn blocks(self) -> [[usize; 2]; 2] {
        let p = self.partner as usize;
        let rest: Vec<usize> = (1..4).filter(|&i| i != p).collect();
        [[0, p], [rest[0], rest[1]]]
    }

    pub fn from_blocks(a: [usize; 2], b: [usize; 2]) -> Option<Pairing> {
        let mut all = [a[0], a[1], b[0], b[1]];
        all.sort_unstable();
        if all != [0, 1, 2, 3] {
            return None;
        }
        let block = if a.contains(&0) { a } else { b };
        let partner = if block[0] == 0 { block[1] } else { block[0] };
        Some(Pairing {
            partner: partner as u8,
        })
    }

    pub fn index(self) -> usize {
        self.partner as usize - 1
    }

    /// Image under a permutation of the four base points.
    pub fn apply(self, perm: &Permutation) -> Pairing {
        let partner = perm.apply(self.partner as usize);
        let zero = perm.apply(0);
        // the block containing the image of 0
        let [_, other] = self.blocks();
        let mapped_other = [perm.apply(other[0]), perm.apply(other[1])];
        let block0 = [zero, partner];
        Pairing::from_blocks(block0, mapped_other).expect("permutation maps partitions to partitions")
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.blocks();
        write!(f, "{}{}|{}{}", a[0] + 1, a[1] + 1, b[0] + 1, b[1] + 1)
    }
}

impl fmt::Debug for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    if a < b {
        [a, b]
    } else {
        [b, a]
    }
}

/// A four-point G-set together with its labelling `b1..b4`.
#[derive(Clone)]
pub struct SigmaConfig {
    ring: Arc<BurnsideRing>,
    point_action: Vec<Permutation>,
    decomposition: BurnsideElement,
}

impl fmt::Debug for SigmaConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SigmaConfig({})", self.decomposition)
    }
}

impl SigmaConfig {
    /// Builds a configuration from the permutation of `b1..b4` induced by
    /// each group element, checking the homomorphism property.
    pub fn from_action<F>(ring: &Arc<BurnsideRing>, action: F) -> Result<Self, NodalError>
    where
        F: Fn(&Permutation) -> Permutation,
    {
        let group = ring.group();
        let point_action: Vec<Permutation> = group.elements().iter().map(&action).collect();
        for (g, img) in group.elements().iter().zip(&point_action) {
            if img.degree() != 4 {
                return Err(NodalError::NotAHomomorphism(format!(
                    "{g} maps to a permutation of degree {}",
                    img.degree()
                )));
            }
        }
        for (a, ia) in group.elements().iter().zip(&point_action) {
            for (b, ib) in group.elements().iter().zip(&point_action) {
                let ab = group.index_of(&(a * b)).expect("group is closed");
                if point_action[ab] != ia * ib {
                    return Err(NodalError::NotAHomomorphism(format!(
                        "image of ({a})({b}) is {} but the product of images is {}",
                        point_action[ab],
                        ia * ib
                    )));
                }
            }
        }
        let set = ConcreteGSet::new(group, 4, |g, x| {
            point_action[group.index_of(g).unwrap()].apply(x)
        })?;
        let decomposition = decompose(ring, &set)?;
        Ok(SigmaConfig {
            ring: ring.clone(),
            point_action,
            decomposition,
        })
    }

    /// Realizes `Σ [G/Hᵢ]` on labelled points: orbits in the given order,
    /// each orbit's cosets in canonical order.
    pub fn from_orbit_types(ring: &Arc<BurnsideRing>, subgroups: &[PermGroup]) -> Result<Self, NodalError> {
        let group = ring.group();
        let mut set: Option<ConcreteGSet> = None;
        for h in subgroups {
            let orbit = ConcreteGSet::cosets(group, h)?;
            set = Some(match set {
                None => orbit,
                Some(s) => s.disjoint_union(&orbit)?,
            });
        }
        let set = set.ok_or(NodalError::WrongCardinality(0))?;
        if set.size() != 4 {
            return Err(NodalError::WrongCardinality(set.size()));
        }
        SigmaConfig::from_action(ring, |g| {
            Permutation::from_images((0..4).map(|x| set.act(g, x)).collect()).expect("action is bijective")
        })
    }

    pub fn ring(&self) -> &Arc<BurnsideRing> {
        &self.ring
    }

    pub fn group(&self) -> &PermGroup {
        self.ring.group()
    }

    /// `[Σ]` in A(G).
    pub fn decomposition(&self) -> &BurnsideElement {
        &self.decomposition
    }

    /// Permutation of `b1..b4` induced by `g`.
    pub fn point_image(&self, g: &Permutation) -> &Permutation {
        &self.point_action[self.group().index_of(g).expect("element of the group")]
    }

    /// Image of G in S4.
    pub fn image_group(&self) -> PermGroup {
        PermGroup::generate(&self.point_action, 4).expect("degree 4")
    }

    pub fn point_set(&self) -> ConcreteGSet {
        ConcreteGSet::new(self.group(), 4, |g, x| self.point_image(g).apply(x)).expect("validated on construction")
    }

    /// Renames `b_i` to `b_{tau(i)}`.
    pub fn relabel(&self, tau: &Permutation) -> Self {
        let inv = tau.inverse();
        SigmaConfig::from_action(&self.ring, |g| &(tau * self.point_image(g)) * &inv)
            .expect("conjugate of a homomorphism")
    }

    /// The induced action on pairings.
    pub fn pairing_action(&self) -> PairingAction {
        let table = self
            .point_action
            .iter()
            .map(|img| Pairing::ALL.map(|p| p.apply(img)))
            .collect();
        PairingAction {
            group: self.group().clone(),
            table,
        }
    }
}

/// Action of G on the three pairings.
#[derive(Clone, Debug)]
pub struct PairingAction {
    group: PermGroup,
    table: Vec<[Pairing; 3]>,
}

impl PairingAction {
    pub fn apply(&self, g: &Permutation, p: Pairing) -> Pairing {
        self.table[self.group.index_of(g).expect("element of the group")][p.index()]
    }
}

/// All four-point G-sets up to isomorphism, one labelled realization each.
pub fn enumerate_sigma_configs(ring: &Arc<BurnsideRing>) -> Vec<SigmaConfig> {
    let order = ring.group().order();
    let candidates: Vec<(usize, usize)> = ring
        .classes()
        .iter()
        .map(|c| (c.class_index, order / c.order()))
        .filter(|&(_, idx)| idx <= 4)
        .collect();

    fn extend(
        candidates: &[(usize, usize)],
        start: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for i in start..candidates.len() {
            let (class, idx) = candidates[i];
            if idx <= remaining {
                current.push(class);
                extend(candidates, i, remaining - idx, current, out);
                current.pop();
            }
        }
    }

    let mut multisets = Vec::new();
    extend(&candidates, 0, 4, &mut Vec::new(), &mut multisets);
    let mut configs: Vec<SigmaConfig> = multisets
        .into_iter()
        .map(|mut classes| {
            // orbits with larger stabilizers get the smaller labels
            classes.sort_unstable_by(|a, b| b.cmp(a));
            let subs: Vec<PermGroup> = classes
                .iter()
                .map(|&c| ring.classes()[c].representative.clone())
                .collect();
            SigmaConfig::from_orbit_types(ring, &subs).expect("orbit sizes add up to 4")
        })
        .collect();
    configs.sort_by(|a, b| {
        let ka: Vec<i64> = a.decomposition.coeffs().iter().rev().copied().collect();
        let kb: Vec<i64> = b.decomposition.coeffs().iter().rev().copied().collect();
        kb.cmp(&ka)
    });
    configs
}

/// Stabilizer of a pairing, its branch set over the stabilizer, and the
/// resulting weight in A(G).
pub fn weight_of(
    sigma: &SigmaConfig,
    pairing: Pairing,
) -> Result<(PermGroup, BurnsideElement, BurnsideElement), NodalError> {
    let action = sigma.pairing_action();
    let (_, stab) = orbit_and_stabilizer(sigma.group(), |g, p| action.apply(g, *p), &pairing)?;
    let sub_ring = BurnsideRing::new(stab.clone());
    let blocks = pairing.blocks();
    let branches = ConcreteGSet::new(&stab, 2, |h, x| {
        let img = sigma.point_image(h);
        let b = blocks[x];
        let moved = sorted_pair(img.apply(b[0]), img.apply(b[1]));
        if moved == blocks[0] {
            0
        } else {
            1
        }
    })?;
    let branch_set = decompose(&sub_ring, &branches)?;
    let local = branch_set.sub(&BurnsideElement::one(&sub_ring))?;
    let weight = inflate(sigma.ring(), &local)?;
    Ok((stab, branch_set, weight))
}

/// One orbit of nodal conics and its weight.
#[derive(Clone, Debug)]
pub struct NodalOrbitReport {
    pub representative: Pairing,
    pub orbit: Vec<Pairing>,
    pub stabilizer: PermGroup,
    /// The two branches as a set over the stabilizer.
    pub branch_set: BurnsideElement,
    pub weight: BurnsideElement,
}

pub fn nodal_orbit_reports(sigma: &SigmaConfig) -> Result<Vec<NodalOrbitReport>, NodalError> {
    let action = sigma.pairing_action();
    let mut covered = [false; 3];
    let mut reports = Vec::new();
    for p in Pairing::ALL {
        if covered[p.index()] {
            continue;
        }
        let (mut orbit, _) = orbit_and_stabilizer(sigma.group(), |g, q| action.apply(g, *q), &p)?;
        orbit.sort();
        for q in &orbit {
            covered[q.index()] = true;
        }
        let (stabilizer, branch_set, weight) = weight_of(sigma, p)?;
        reports.push(NodalOrbitReport {
            representative: p,
            orbit,
            stabilizer,
            branch_set,
            weight,
        });
    }
    Ok(reports)
}

/// A row of the fixed-point table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub class: String,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub sigma: SigmaConfig,
    pub nodal_orbits: Vec<NodalOrbitReport>,
    pub lhs: BurnsideElement,
    pub rhs: BurnsideElement,
    pub equal: bool,
    /// One row per conjugacy class of subgroups, in canonical order.
    pub table: Vec<TableRow>,
}

impl VerificationReport {
    pub fn group(&self) -> &PermGroup {
        self.sigma.group()
    }

    /// The fixed-point table with one row per subgroup rather than per
    /// conjugacy class.
    pub fn subgroup_table(&self) -> Vec<TableRow> {
        let ring = self.sigma.ring();
        let mut rows = Vec::new();
        for (class, row) in ring.classes().iter().zip(&self.table) {
            for m in &class.members {
                rows.push(TableRow {
                    class: ring.subgroup_label(m),
                    lhs: row.lhs,
                    rhs: row.rhs,
                });
            }
        }
        rows
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct OrbitJson {
            representative: String,
            orbit: Vec<String>,
            stabilizer: String,
            branch_set: serde_json::Value,
            weight: serde_json::Value,
        }
        #[derive(Serialize)]
        struct ReportJson<'a> {
            group: String,
            sigma: serde_json::Value,
            orbits: Vec<OrbitJson>,
            lhs: serde_json::Value,
            rhs: serde_json::Value,
            equal: bool,
            table: &'a [TableRow],
        }
        let orbits = self
            .nodal_orbits
            .iter()
            .map(|o| OrbitJson {
                representative: o.representative.to_string(),
                orbit: o.orbit.iter().map(|p| p.to_string()).collect(),
                stabilizer: self.sigma.ring().subgroup_label(&o.stabilizer),
                branch_set: o.branch_set.to_json_value(),
                weight: o.weight.to_json_value(),
            })
            .collect();
        serde_json::to_value(ReportJson {
            group: self.group().name(),
            sigma: self.sigma.decomposition().to_json_value(),
            orbits,
            lhs: self.lhs.to_json_value(),
            rhs: self.rhs.to_json_value(),
            equal: self.equal,
            table: &self.table,
        })
        .expect("plain data serializes")
    }
}

/// Compares the weighted orbit count with `[Σ] - {*}`.
pub fn verify(sigma: &SigmaConfig) -> Result<VerificationReport, NodalError> {
    let ring = sigma.ring();
    let nodal_orbits = nodal_orbit_reports(sigma)?;
    let mut lhs = BurnsideElement::zero(ring);
    for o in &nodal_orbits {
        lhs = lhs.add(&o.weight)?;
    }
    let rhs = sigma.decomposition().sub(&BurnsideElement::one(ring))?;
    let cmp = lhs.compare(&rhs)?;
    let table = cmp
        .rows
        .iter()
        .map(|r| TableRow {
            class: ring.class_label(r.class_index),
            lhs: r.lhs,
            rhs: r.rhs,
        })
        .collect();
    Ok(VerificationReport {
        sigma: sigma.clone(),
        nodal_orbits,
        equal: cmp.equal(),
        lhs,
        rhs,
        table,
    })
}

/// Verifies every configuration of `enumerate_sigma_configs`, in order.
pub fn verify_all(ring: &Arc<BurnsideRing>) -> Result<Vec<VerificationReport>, NodalError> {
    enumerate_sigma_configs(ring).par_iter().map(verify).collect()
}

/// Parses a configuration such as `"2*+[G]"`, `"[G/<(12)>] + *"` or
/// `"2[G/<(13),(24)>]"`. Terms are `k*` (k fixed points) or `[G/<gens>]`
/// with an optional multiplicity; `[G]` is the regular orbit and `[G/G]`
/// a fixed point.
pub fn parse_sigma_spec(ring: &Arc<BurnsideRing>, spec: &str) -> Result<SigmaConfig, NodalError> {
    let err = |reason: String| NodalError::SigmaSpec {
        spec: spec.to_string(),
        reason,
    };
    let group = ring.group();
    let mut fixed: Vec<PermGroup> = Vec::new();
    let mut orbits: Vec<PermGroup> = Vec::new();
    let mut depth = 0i32;
    let mut terms = Vec::new();
    let mut current = String::new();
    for ch in spec.chars() {
        match ch {
            '[' | '<' | '(' => depth += 1,
            ']' | '>' | ')' => depth -= 1,
            _ => {}
        }
        if ch == '+' && depth == 0 {
            terms.push(std::mem::take(&mut current));
        } else {
            current.push(ch);
        }
    }
    terms.push(current);

    for raw in terms {
        let term: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if term.is_empty() {
            return Err(err("empty term".into()));
        }
        let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
        let rest = &term[digits.len()..];
        let count = if digits.is_empty() {
            1
        } else {
            digits.parse::<usize>().map_err(|_| err(format!("bad multiplicity in {term:?}")))?
        };
        let rest = rest.strip_prefix('*').filter(|r| r.starts_with('[')).unwrap_or(rest);
        if rest == "*" || rest == "{*}" {
            for _ in 0..count {
                fixed.push(group.clone());
            }
            continue;
        }
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err(format!("unrecognized term {term:?}")))?;
        let sub = if inner == "G" {
            PermGroup::trivial(group.degree())
        } else if inner == "G/G" {
            group.clone()
        } else {
            let gens = inner
                .strip_prefix("G/")
                .ok_or_else(|| err(format!("expected G/<...> in {term:?}")))?;
            PermGroup::parse_generators(gens, group.degree())?
        };
        if !sub.is_subgroup_of(group) {
            return Err(err(format!("{} is not a subgroup of {}", sub.name(), group.name())));
        }
        for _ in 0..count {
            orbits.push(sub.clone());
        }
    }
    fixed.extend(orbits);
    let total: usize = fixed.iter().map(|h| group.order() / h.order()).sum();
    if total != 4 {
        return Err(NodalError::WrongCardinality(total));
    }
    SigmaConfig::from_orbit_types(ring, &fixed)
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

    fn elem(ring: &Arc<BurnsideRing>, terms: &[(i64, &PermGroup)]) -> BurnsideElement {
        let mut x = BurnsideElement::zero(ring);
        for (n, h) in terms {
            x = x.add(&BurnsideElement::orbit_type(ring, h).unwrap().scale(*n)).unwrap();
        }
        x
    }

    /// The weighted count as a G-set is (lines through two base points)
    /// minus (pairings); checked here by counting fixed objects directly.
    fn oracle_marks(sigma: &SigmaConfig, k: &PermGroup) -> (i64, i64) {
        let fixes = |f: &dyn Fn(&Permutation) -> bool| k.elements().iter().all(|h| f(sigma.point_image(h)));
        let mut lines = 0;
        for a in 0..4 {
            for b in (a + 1)..4 {
                if fixes(&|g| sorted_pair(g.apply(a), g.apply(b)) == [a, b]) {
                    lines += 1;
                }
            }
        }
        let pairings = Pairing::ALL.iter().filter(|&&q| fixes(&|g| q.apply(g) == q)).count() as i64;
        let points = (0..4).filter(|&x| fixes(&|g| g.apply(x) == x)).count() as i64;
        (lines - pairings, points - 1)
    }

    #[test]
    fn pairing_basics() {
        let names: Vec<String> = Pairing::ALL.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["12|34", "13|24", "14|23"]);
        assert_eq!(Pairing::ALL[1].apply(&p("(12)")), Pairing::ALL[2]);
        for q in Pairing::ALL {
            assert_eq!(q.apply(&Permutation::identity(4)), q);
        }
        // (123) cycles 12|34 -> 23|14 -> 31|24 -> 12|34
        let c = p("(123)");
        assert_eq!(Pairing::ALL[0].apply(&c), Pairing::ALL[2]);
        assert_eq!(Pairing::ALL[2].apply(&c), Pairing::ALL[1]);
        assert_eq!(Pairing::ALL[1].apply(&c), Pairing::ALL[0]);
        assert!(Pairing::from_blocks([0, 1], [0, 2]).is_none());
    }

    #[test]
    fn z2_configs_and_values() {
        let g = gen(&["(12)"]);
        let ring = BurnsideRing::new(g.clone());
        let configs = enumerate_sigma_configs(&ring);
        assert_eq!(configs.len(), 3);
        let one = BurnsideElement::one(&ring);
        let reg = BurnsideElement::basis(&ring, 0);
        let decs: Vec<BurnsideElement> = configs.iter().map(|c| c.decomposition().clone()).collect();
        assert!(decs.contains(&one.scale(4)));
        assert!(decs.contains(&reg.scale(2)));
        assert!(decs.contains(&one.scale(2).add(&reg).unwrap()));

        for r in verify_all(&ring).unwrap() {
            assert!(r.equal);
            let d = r.sigma.decomposition();
            let expected = if *d == one.scale(4) {
                one.scale(3)
            } else if *d == reg.scale(2) {
                reg.scale(2).sub(&one).unwrap()
            } else {
                reg.add(&one).unwrap()
            };
            assert_eq!(r.lhs, expected);
        }
    }

    #[test]
    fn z2_mixed_config_orbit() {
        let g = gen(&["(12)"]);
        let ring = BurnsideRing::new(g);
        let sigma = parse_sigma_spec(&ring, "2*+[G]").unwrap();
        let act = sigma.pairing_action();
        assert_eq!(act.apply(&p("(12)"), Pairing::ALL[1]), Pairing::ALL[2]);
        let reports = nodal_orbit_reports(&sigma).unwrap();
        assert_eq!(reports.len(), 2);
        let moving = &reports[1];
        assert_eq!(moving.orbit, vec![Pairing::ALL[1], Pairing::ALL[2]]);
        assert_eq!(moving.stabilizer.order(), 1);
        assert_eq!(moving.weight, BurnsideElement::basis(&ring, 0));
    }

    #[test]
    fn trivial_group() {
        let ring = BurnsideRing::new(PermGroup::trivial(4));
        let configs = enumerate_sigma_configs(&ring);
        assert_eq!(configs.len(), 1);
        let r = verify(&configs[0]).unwrap();
        assert_eq!(r.nodal_orbits.len(), 3);
        for o in &r.nodal_orbits {
            assert_eq!(o.weight, BurnsideElement::one(&ring));
        }
        assert!(r.equal);
        assert_eq!(r.lhs, BurnsideElement::one(&ring).scale(3));
    }

    #[test]
    fn s3_fixed_point_plus_three_cycle_orbit() {
        let g = gen(&["(123)", "(12)"]);
        let ring = BurnsideRing::new(g);
        let sigma = parse_sigma_spec(&ring, "*+[G/<(12)>]").unwrap();
        let r = verify(&sigma).unwrap();
        assert_eq!(r.nodal_orbits.len(), 1);
        let expected = BurnsideElement::orbit_type(&ring, &gen(&["(12)"])).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, expected);
        assert_eq!(r.rhs, expected);
        // the generator (123) of G moves every pairing
        let act = sigma.pairing_action();
        for q in Pairing::ALL {
            assert_ne!(act.apply(&p("(123)"), q), q);
        }
    }

    #[test]
    fn a4_configs() {
        let g = gen(&["(123)", "(12)(34)"]);
        let ring = BurnsideRing::new(g);
        let configs = enumerate_sigma_configs(&ring);
        assert_eq!(configs.len(), 3);
        let v = gen(&["(12)(34)", "(13)(24)"]);
        let a3 = gen(&["(123)"]);
        let one = BurnsideElement::one(&ring);
        let decs: Vec<BurnsideElement> = configs.iter().map(|c| c.decomposition().clone()).collect();
        assert!(decs.contains(&one.scale(4)));
        assert!(decs.contains(&elem(&ring, &[(1, &g_of(&ring)), (1, &v)])));
        assert!(decs.contains(&elem(&ring, &[(1, &a3)])));
    }

    fn g_of(ring: &Arc<BurnsideRing>) -> PermGroup {
        ring.group().clone()
    }

    #[test]
    fn a4_transitive_config_weight_and_marks() {
        let g = gen(&["(123)", "(12)(34)"]);
        let ring = BurnsideRing::new(g.clone());
        let a3 = gen(&["(123)"]);
        let v = gen(&["(12)(34)", "(13)(24)"]);
        let sigma = SigmaConfig::from_orbit_types(&ring, std::slice::from_ref(&a3)).unwrap();
        let r = verify(&sigma).unwrap();
        assert_eq!(r.nodal_orbits.len(), 1);
        assert_eq!(r.nodal_orbits[0].stabilizer, v);
        let expected = elem(&ring, &[(1, &gen(&["(14)(23)"])), (-1, &v)]);
        assert_eq!(r.lhs, expected);
        // marks over (trivial, Z2, V, A3, A4), each side checked against the
        // direct count of fixed lines, pairings and points
        let reps: Vec<PermGroup> = ring.classes().iter().map(|c| c.representative.clone()).collect();
        assert_eq!(reps.iter().map(|h| h.order()).collect::<Vec<_>>(), vec![1, 2, 3, 4, 12]);
        for (row, h) in r.table.iter().zip(&reps) {
            let (lhs, rhs) = oracle_marks(&sigma, h);
            assert_eq!((row.lhs, row.rhs), (lhs, rhs), "class {}", row.class);
        }
        // the two sides differ on the normal Klein subgroup and on A4 itself
        let lhs_marks: Vec<i64> = r.table.iter().map(|t| t.lhs).collect();
        let rhs_marks: Vec<i64> = r.table.iter().map(|t| t.rhs).collect();
        // class order here is (1, Z2, A3, V, A4)
        assert_eq!(lhs_marks, vec![3, -1, 0, -3, 0]);
        assert_eq!(rhs_marks, vec![3, -1, 0, -1, -1]);
        assert!(!r.equal);
    }

    #[test]
    fn klein_regular_config() {
        let g = gen(&["(12)(34)", "(13)(24)"]);
        let ring = BurnsideRing::new(g.clone());
        let sigma = parse_sigma_spec(&ring, "[G]").unwrap();
        let r = verify(&sigma).unwrap();
        assert_eq!(r.nodal_orbits.len(), 3);
        for o in &r.nodal_orbits {
            assert_eq!(o.stabilizer, g);
        }
        let one = BurnsideElement::one(&ring);
        let expected = elem(
            &ring,
            &[(1, &gen(&["(12)(34)"])), (1, &gen(&["(13)(24)"])), (1, &gen(&["(14)(23)"]))],
        )
        .sub(&one.scale(3))
        .unwrap();
        assert_eq!(r.lhs, expected);
        let lhs: Vec<i64> = r.table.iter().map(|t| t.lhs).collect();
        let rhs: Vec<i64> = r.table.iter().map(|t| t.rhs).collect();
        assert_eq!(lhs, vec![3, -1, -1, -1, -3]);
        assert_eq!(rhs, vec![3, -1, -1, -1, -1]);
        let witnesses: Vec<&TableRow> = r.table.iter().filter(|t| t.lhs != t.rhs).collect();
        assert_eq!(witnesses.len(), 1);
        assert_eq!(witnesses[0].class, "G");
        for h in ring.classes() {
            let (l, rr) = oracle_marks(&sigma, &h.representative);
            assert_eq!(r.lhs.marks(h.class_index).unwrap(), l);
            assert_eq!(r.rhs.marks(h.class_index).unwrap(), rr);
        }
    }

    #[test]
    fn every_config_matches_direct_count() {
        for gens in [
            vec![],
            vec!["(12)"],
            vec!["(12)(34)"],
            vec!["(123)"],
            vec!["(1234)"],
            vec!["(12)(34)", "(13)(24)"],
            vec!["(12)", "(34)"],
            vec!["(123)", "(12)"],
            vec!["(1234)", "(13)"],
            vec!["(123)", "(12)(34)"],
            vec!["(1234)", "(12)"],
        ] {
            let ring = BurnsideRing::new(gen(&gens));
            for r in verify_all(&ring).unwrap() {
                assert_eq!(r.lhs.cardinality(), 3);
                for h in ring.classes() {
                    let (l, rr) = oracle_marks(&r.sigma, &h.representative);
                    assert_eq!(r.lhs.marks(h.class_index).unwrap(), l);
                    assert_eq!(r.rhs.marks(h.class_index).unwrap(), rr);
                }
            }
        }
    }

    #[test]
    fn weights_independent_of_orbit_representative() {
        let ring = BurnsideRing::new(gen(&["(1234)", "(13)"]));
        for sigma in enumerate_sigma_configs(&ring) {
            for o in nodal_orbit_reports(&sigma).unwrap() {
                for q in &o.orbit {
                    let (_, _, w) = weight_of(&sigma, *q).unwrap();
                    assert!(w.equals(&o.weight).unwrap());
                }
            }
        }
    }

    #[test]
    fn relabelling_preserves_both_sides() {
        let ring = BurnsideRing::new(gen(&["(123)", "(12)"]));
        let s4 = PermGroup::symmetric(4);
        for sigma in enumerate_sigma_configs(&ring) {
            let base = verify(&sigma).unwrap();
            for tau in s4.elements() {
                let r = verify(&sigma.relabel(tau)).unwrap();
                assert_eq!(r.lhs, base.lhs);
                assert_eq!(r.rhs, base.rhs);
            }
        }
    }

    #[test]
    fn sigma_spec_errors() {
        let ring = BurnsideRing::new(gen(&["(12)"]));
        assert!(matches!(parse_sigma_spec(&ring, "3*"), Err(NodalError::WrongCardinality(3))));
        assert!(matches!(parse_sigma_spec(&ring, "2*+[H]"), Err(NodalError::SigmaSpec { .. })));
        assert!(matches!(
            parse_sigma_spec(&ring, "2*+[G/<(34)>]"),
            Err(NodalError::SigmaSpec { .. })
        ));
        assert!(parse_sigma_spec(&ring, "2[G]").is_ok());
        assert!(parse_sigma_spec(&ring, "2*[G]").is_ok());
        assert!(parse_sigma_spec(&ring, "4{*}").is_ok());
        assert!(parse_sigma_spec(&ring, "2*+2[G/G]").is_ok());
    }

    #[test]
    fn non_homomorphisms_rejected() {
        let ring = BurnsideRing::new(gen(&["(123)"]));
        let bad = SigmaConfig::from_action(&ring, |g| if g.is_identity() { g.clone() } else { p("(12)") });
        assert!(matches!(bad, Err(NodalError::NotAHomomorphism(_))));
    }
}
