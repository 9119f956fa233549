//! Group actions on P² and the concrete invariant pencils built from them.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::burnside::BurnsideRing;
use crate::nodal::{verify, Pairing, SigmaConfig, VerificationReport};
use crate::permgroup::{PermGroup, Permutation};

use super::conic::{
    base_locus, factor_degenerate, nodal_members, pencil_invariant, pencil_through, sym2, BaseLocus, Conic,
    Degenerate, NodalMember, ProjPoint,
};
use super::linalg::{Mat, Mat3, Mat6};
use super::quadext::{Field, QuadExt};
use super::GeometryError;

/// A homomorphism from a permutation group to PGL(3), tabulated on every
/// element.
#[derive(Clone, Debug)]
pub struct ProjectiveRep {
    group: PermGroup,
    matrices: Vec<Mat3>,
}

impl ProjectiveRep {
    /// Extends generator images to the whole group, checking that every
    /// relation holds up to scalar.
    pub fn from_generators(group: &PermGroup, images: &[(Permutation, Mat3)]) -> Result<Self, GeometryError> {
        for (g, m) in images {
            if !group.contains(g) {
                return Err(GeometryError::NotARepresentation(format!("{g} is not in {}", group.name())));
            }
            if m.det().is_zero() {
                return Err(GeometryError::NotARepresentation(format!("matrix of {g} is singular")));
            }
        }
        let mut table: Vec<Option<Mat3>> = vec![None; group.order()];
        let id = group.identity();
        table[group.index_of(&id).unwrap()] = Some(Mat::identity(3));
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            let mx = table[group.index_of(&x).unwrap()].clone().unwrap();
            for (s, ms) in images {
                let y = s * &x;
                let my = ms * &mx;
                let slot = &mut table[group.index_of(&y).unwrap()];
                match slot {
                    None => {
                        *slot = Some(my);
                        queue.push_back(y);
                    }
                    Some(existing) if !existing.projectively_equal(&my) => {
                        return Err(GeometryError::NotARepresentation(format!(
                            "two words for {y} give different matrices"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        if table.iter().any(Option::is_none) {
            return Err(GeometryError::NotARepresentation(format!(
                "the given elements do not generate {}",
                group.name()
            )));
        }
        Self::from_table(group, table.into_iter().flatten().collect())
    }

    /// `matrices[i]` is the image of `group.elements()[i]`.
    pub fn from_table(group: &PermGroup, matrices: Vec<Mat3>) -> Result<Self, GeometryError> {
        if matrices.len() != group.order() {
            return Err(GeometryError::NotARepresentation("table size differs from group order".into()));
        }
        let rep = ProjectiveRep {
            group: group.clone(),
            matrices,
        };
        for g in group.elements() {
            for h in group.elements() {
                if !rep.matrix(&(g * h)).projectively_equal(&(rep.matrix(g) * rep.matrix(h))) {
                    return Err(GeometryError::NotARepresentation(format!(
                        "M(({g})({h})) is not a multiple of M({g})·M({h})"
                    )));
                }
            }
        }
        Ok(rep)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn matrices(&self) -> &[Mat3] {
        &self.matrices
    }

    pub fn matrix(&self, g: &Permutation) -> &Mat3 {
        &self.matrices[self.group.index_of(g).expect("element of the group")]
    }

    pub fn apply(&self, g: &Permutation, p: &ProjPoint) -> ProjPoint {
        p.transform(self.matrix(g)).expect("invertible matrix")
    }
}

/// The permutation of `base` induced by each group element, as a
/// four-point G-set.
pub fn induced_sigma(
    rep: &ProjectiveRep,
    base: &[ProjPoint],
    ring: &Arc<BurnsideRing>,
) -> Result<SigmaConfig, GeometryError> {
    if base.len() != 4 {
        return Err(GeometryError::BaseNotPreserved(format!("expected 4 points, got {}", base.len())));
    }
    let mut perms = Vec::with_capacity(rep.group().order());
    for g in rep.group().elements() {
        let mut images = Vec::with_capacity(4);
        for p in base {
            let q = rep.apply(g, p);
            let j = base
                .iter()
                .position(|b| *b == q)
                .ok_or_else(|| GeometryError::BaseNotPreserved(format!("({g})·{p} = {q}")))?;
            images.push(j);
        }
        perms.push(Permutation::from_images(images).map_err(|_| {
            GeometryError::BaseNotPreserved(format!("({g}) identifies two base points"))
        })?);
    }
    let group = rep.group().clone();
    Ok(SigmaConfig::from_action(ring, |g| perms[group.index_of(g).unwrap()].clone())?)
}

/// A pencil `⟨f, g⟩` together with a group acting on P².
#[derive(Clone, Debug)]
pub struct PencilCase {
    pub label: String,
    pub f: Conic,
    pub g: Conic,
    pub rep: Arc<ProjectiveRep>,
    /// Base points in a prescribed labelling `b1..b4`; when absent the
    /// canonical order of `base_locus` is used.
    pub labelled_base: Option<Vec<ProjPoint>>,
}

/// Everything computed from a general pencil.
#[derive(Clone, Debug)]
pub struct PencilAnalysis {
    pub locus: BaseLocus,
    pub base: Vec<ProjPoint>,
    pub nodal: Vec<(NodalMember, Pairing)>,
    pub sigma: SigmaConfig,
    pub report: VerificationReport,
}

impl PencilCase {
    pub fn is_invariant(&self) -> bool {
        pencil_invariant(self.rep.matrices(), &self.f, &self.g)
    }

    pub fn nodal_members(&self) -> Result<Vec<NodalMember>, GeometryError> {
        nodal_members(&self.f, &self.g)
    }

    pub fn base_locus(&self) -> Result<BaseLocus, GeometryError> {
        base_locus(&self.f, &self.g)
    }

    /// Base points in labelling order.
    pub fn labelled_points(&self, locus: &BaseLocus) -> Result<Vec<ProjPoint>, GeometryError> {
        match &self.labelled_base {
            None => Ok(locus.points.clone()),
            Some(pts) => {
                let mut a = pts.clone();
                let mut b = locus.points.clone();
                a.sort_by(|x, y| x.canonical_cmp(y));
                b.sort_by(|x, y| x.canonical_cmp(y));
                if a != b {
                    return Err(GeometryError::BaseNotPreserved(format!(
                        "labelled points {pts:?} differ from the base locus {:?}",
                        locus.points
                    )));
                }
                Ok(pts.clone())
            }
        }
    }

    /// Matches each nodal member with the pairing of base points cut out
    /// by its two lines.
    pub fn nodal_pairings(&self, base: &[ProjPoint], field: Field) -> Result<Vec<(NodalMember, Pairing)>, GeometryError> {
        let mut field = field;
        let mut out = Vec::new();
        for m in self.nodal_members()? {
            let (l1, l2) = match factor_degenerate(&m.conic, &mut field)? {
                Degenerate::LinePair(a, b) => (a, b),
                Degenerate::DoubleLine(_) => {
                    return Err(GeometryError::OutOfScope(format!("member {} is a double line", m.conic)))
                }
            };
            let on = |l: &super::conic::Line| -> Vec<usize> { (0..4).filter(|&i| l.contains(&base[i])).collect() };
            let (a, b) = (on(&l1), on(&l2));
            let pairing = match (a.as_slice(), b.as_slice()) {
                ([a0, a1], [b0, b1]) => Pairing::from_blocks([*a0, *a1], [*b0, *b1]),
                _ => None,
            }
            .ok_or_else(|| GeometryError::OutOfScope(format!("lines of {} do not split the base points", m.conic)))?;
            out.push((m, pairing));
        }
        Ok(out)
    }

    pub fn sigma(&self) -> Result<SigmaConfig, GeometryError> {
        let locus = self.base_locus()?;
        let ring = BurnsideRing::new(self.rep.group().clone());
        induced_sigma(&self.rep, &self.labelled_points(&locus)?, &ring)
    }

    /// Base locus, induced four-point set and the comparison of both sides.
    pub fn analyze(&self) -> Result<PencilAnalysis, GeometryError> {
        let locus = self.base_locus()?;
        let base = self.labelled_points(&locus)?;
        let nodal = self.nodal_pairings(&base, locus.field)?;
        let ring = BurnsideRing::new(self.rep.group().clone());
        let sigma = induced_sigma(&self.rep, &base, &ring)?;
        let report = verify(&sigma)?;
        Ok(PencilAnalysis {
            locus,
            base,
            nodal,
            sigma,
            report,
        })
    }
}

fn perm(s: &str) -> Permutation {
    Permutation::parse(s, 4).expect("valid literal")
}

/// ⟨(1234), (13)⟩ in S4.
pub fn d8_group() -> PermGroup {
    PermGroup::generate(&[perm("(1234)"), perm("(13)")], 4).expect("degree 4")
}

/// The rotation and reflection matrices for signs `a`, `b`.
pub fn d8_generators(a: i64, b: i64) -> (Mat3, Mat3) {
    let rotation = Mat::from_ints(&[[0, -1, 0], [1, 0, 0], [0, 0, a]]);
    let reflection = Mat::from_ints(&[[1, 0, 0], [0, -1, 0], [0, 0, b]]);
    (rotation, reflection)
}

/// D8 acting on P² with `(1234)` as the rotation and `(13)` as the
/// reflection.
pub fn d8_rep(a: i64, b: i64) -> Result<ProjectiveRep, GeometryError> {
    if a.abs() != 1 || b.abs() != 1 {
        return Err(GeometryError::OutOfScope(format!("signs must be ±1, got a={a}, b={b}")));
    }
    let (r, s) = d8_generators(a, b);
    ProjectiveRep::from_generators(&d8_group(), &[(perm("(1234)"), r), (perm("(13)"), s)])
}

/// Common eigenspaces of the two generators acting on conics.
#[derive(Clone, Debug)]
pub struct D8Eigenspaces {
    pub rotation: Mat6,
    pub reflection: Mat6,
    /// `((ε_r, ε_s), basis)` for the four sign pairs.
    pub common: Vec<((i64, i64), Vec<Conic>)>,
    /// The invariant plane on which the rotation squares to −1.
    pub plane: Vec<Conic>,
}

impl D8Eigenspaces {
    /// Basis vectors of all common eigenspaces, in order.
    pub fn invariant_lines(&self) -> Vec<Conic> {
        self.common.iter().flat_map(|(_, b)| b.clone()).collect()
    }
}

fn vec_to_conic(v: &[QuadExt]) -> Conic {
    Conic::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone(), v[5].clone()])
        .expect("nonzero kernel vector")
}

fn stacked_kernel(blocks: &[Mat6]) -> Vec<Vec<QuadExt>> {
    let rows = blocks.iter().flat_map(|m| (0..m.rows()).map(|i| m.row(i).to_vec())).collect();
    Mat::from_rows(rows).kernel()
}

pub fn d8_eigenspaces(a: i64, b: i64) -> D8Eigenspaces {
    let (r, s) = d8_generators(a, b);
    let (sr, ss) = (sym2(&r), sym2(&s));
    let id = Mat::identity(6);
    let mut common = Vec::new();
    for eps in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
        let blocks = [
            sr.sub(&id.scale(&QuadExt::int(eps.0))),
            ss.sub(&id.scale(&QuadExt::int(eps.1))),
        ];
        let basis = stacked_kernel(&blocks).iter().map(|v| vec_to_conic(v)).collect();
        common.push((eps, basis));
    }
    let sq = &sr * &sr;
    let plane = stacked_kernel(&[sq.sub(&id.scale(&QuadExt::int(-1)))])
        .iter()
        .map(|v| vec_to_conic(v))
        .collect();
    D8Eigenspaces {
        rotation: sr,
        reflection: ss,
        common,
        plane,
    }
}

/// The nine candidate invariant pencils for signs `a`, `b` and the
/// parameters `c`, `d` of the last two.
pub fn d8_case_suite(a: i64, b: i64, c: &QuadExt, d: &QuadExt) -> Result<Vec<PencilCase>, GeometryError> {
    if c.is_zero() || d.is_zero() {
        return Err(GeometryError::OutOfScope("c and d must be nonzero".into()));
    }
    let rep = Arc::new(d8_rep(a, b)?);
    let specs = [
        ("YZ", "XZ"),
        ("Z^2", "X^2-Y^2"),
        ("Z^2", "X^2+Y^2"),
        ("Z^2", "XY"),
        ("X^2-Y^2", "X^2+Y^2"),
        ("X^2-Y^2", "XY"),
        ("X^2+Y^2", "XY"),
        ("X^2-Y^2", "c*(X^2+Y^2) + d*Z^2"),
        ("XY", "c*(X^2+Y^2) + d*Z^2"),
    ];
    specs
        .iter()
        .enumerate()
        .map(|(i, (f, g))| {
            Ok(PencilCase {
                label: format!("case {}", i + 1),
                f: Conic::parse(f, c, d)?,
                g: Conic::parse(g, c, d)?,
                rep: rep.clone(),
                labelled_base: None,
            })
        })
        .collect()
}

/// The Klein four-group `{(), (12)(34), (13)(24), (14)(23)}` acting on P².
pub fn klein_rep() -> Result<ProjectiveRep, GeometryError> {
    let group = PermGroup::generate(&[perm("(12)(34)"), perm("(13)(24)")], 4).expect("degree 4");
    let table = [
        ("()", Mat::identity(3)),
        ("(12)(34)", Mat::from_ints(&[[-1, 1, 0], [0, 1, 0], [0, 1, -1]])),
        ("(13)(24)", Mat::from_ints(&[[0, -1, 1], [0, -1, 0], [1, -1, 0]])),
        ("(14)(23)", Mat::from_ints(&[[0, 0, -1], [0, -1, 0], [-1, 0, 0]])),
    ];
    let mut matrices = vec![Mat::identity(3); 4];
    for (g, m) in table {
        matrices[group.index_of(&perm(g)).expect("element of the Klein group")] = m;
    }
    ProjectiveRep::from_table(&group, matrices)
}

/// Elements of the Klein group in the order `(), (12)(34), (13)(24), (14)(23)`.
pub fn klein_elements() -> [Permutation; 4] {
    ["()", "(12)(34)", "(13)(24)", "(14)(23)"].map(perm)
}

/// The pencil through the orbit of `[1:2:3]`, labelled `b_i = g_i·p`.
pub fn klein_counterexample() -> Result<PencilCase, GeometryError> {
    let rep = klein_rep()?;
    let p = ProjPoint::from_ints(1, 2, 3);
    let base: Vec<ProjPoint> = klein_elements().iter().map(|g| rep.apply(g, &p)).collect();
    let (f, g) = pencil_through(&base)?;
    Ok(PencilCase {
        label: "Klein orbit of [1:2:3]".into(),
        f,
        g,
        rep: Arc::new(rep),
        labelled_base: Some(base),
    })
}
