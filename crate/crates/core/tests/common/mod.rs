//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use nodal_conics::burnside::{BurnsideRing, ConcreteGSet};
use nodal_conics::cli::{group_preset, PRESETS};
use nodal_conics::permgroup::{subgroup_classes, PermGroup, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn perm(s: &str) -> Permutation {
    Permutation::parse(s, 4).unwrap()
}

pub fn group(gens: &[&str]) -> PermGroup {
    let g: Vec<Permutation> = gens.iter().map(|s| perm(s)).collect();
    PermGroup::generate(&g, 4).unwrap()
}

pub fn presets() -> Vec<(&'static str, PermGroup)> {
    PRESETS.iter().map(|(n, _)| (*n, group_preset(n).unwrap())).collect()
}

/// Every subgroup of S4 (30 of them).
pub fn all_subgroups_of_s4() -> Vec<PermGroup> {
    subgroup_classes(&PermGroup::symmetric(4))
        .into_iter()
        .flat_map(|c| c.members)
        .collect()
}

/// Every subgroup of `g`, found by brute force over subsets generated by
/// pairs of elements (enough for subgroups of S4, which are 2-generated).
pub fn subgroups_of(g: &PermGroup) -> Vec<PermGroup> {
    let mut out: Vec<PermGroup> = Vec::new();
    let els = g.elements();
    for a in els {
        for b in els {
            let h = PermGroup::generate(&[a.clone(), b.clone()], g.degree()).unwrap();
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}

/// A random G-set of at most `max_size` points: a union of coset spaces,
/// randomly relabelled.
pub fn random_gset<R: Rng>(g: &PermGroup, max_size: usize, rng: &mut R) -> Option<ConcreteGSet> {
    let subs: Vec<PermGroup> = subgroups_of(g)
        .into_iter()
        .filter(|h| g.order() / h.order() <= max_size)
        .collect();
    let target = rng.gen_range(1..=max_size);
    let mut set: Option<ConcreteGSet> = None;
    let mut size = 0;
    for _ in 0..8 {
        let h = subs.choose(rng).unwrap();
        let idx = g.order() / h.order();
        if size + idx > target {
            continue;
        }
        let orbit = ConcreteGSet::cosets(g, h).unwrap();
        set = Some(match set {
            None => orbit,
            Some(s) => s.disjoint_union(&orbit).unwrap(),
        });
        size += idx;
    }
    let set = set?;
    let mut relabel: Vec<usize> = (0..set.size()).collect();
    relabel.shuffle(rng);
    Some(set.relabel(&relabel))
}

/// All H-sets with at most `max_size` points up to isomorphism, realized
/// on coset spaces.
pub fn all_small_hsets(h: &PermGroup, max_size: usize) -> Vec<ConcreteGSet> {
    let reps: Vec<PermGroup> = subgroup_classes(h).into_iter().map(|c| c.representative).collect();
    let mut out = Vec::new();
    fn extend(
        h: &PermGroup,
        reps: &[PermGroup],
        start: usize,
        remaining: usize,
        current: Option<ConcreteGSet>,
        out: &mut Vec<ConcreteGSet>,
    ) {
        if let Some(c) = &current {
            out.push(c.clone());
        }
        for i in start..reps.len() {
            let idx = h.order() / reps[i].order();
            if idx <= remaining {
                let orbit = ConcreteGSet::cosets(h, &reps[i]).unwrap();
                let next = match &current {
                    None => orbit,
                    Some(c) => c.disjoint_union(&orbit).unwrap(),
                };
                extend(h, reps, i, remaining - idx, Some(next), out);
            }
        }
    }
    extend(h, &reps, 0, max_size, None, &mut out);
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// `(G × X)/∼` with `(gh, x) ∼ (g, hx)` and `g'·(g, x) = (g'g, x)`, built
/// literally from pairs.
pub fn literal_inflation(g: &PermGroup, h: &PermGroup, x: &ConcreteGSet) -> ConcreteGSet {
    let n = x.size();
    let idx = |gi: usize, xi: usize| gi * n + xi;
    let mut parent: Vec<usize> = (0..g.order() * n).collect();
    for (gi, ge) in g.elements().iter().enumerate() {
        for he in h.elements() {
            let gh = g.index_of(&(ge * he)).unwrap();
            for xi in 0..n {
                let a = find(&mut parent, idx(gh, xi));
                let b = find(&mut parent, idx(gi, x.act(he, xi)));
                parent[a] = b;
            }
        }
    }
    let mut class_of = vec![usize::MAX; parent.len()];
    let mut classes = 0;
    for i in 0..parent.len() {
        let r = find(&mut parent, i);
        if class_of[r] == usize::MAX {
            class_of[r] = classes;
            classes += 1;
        }
        class_of[i] = class_of[r];
    }
    let mut reps = vec![0usize; classes];
    for i in (0..parent.len()).rev() {
        reps[class_of[i]] = i;
    }
    ConcreteGSet::new(g, classes, |gp, c| {
        let i = reps[c];
        let (gi, xi) = (i / n, i % n);
        let moved = g.index_of(&(gp * &g.elements()[gi])).unwrap();
        class_of[idx(moved, xi)]
    })
    .unwrap()
}

pub fn ring(g: &PermGroup) -> Arc<BurnsideRing> {
    BurnsideRing::new(g.clone())
}
