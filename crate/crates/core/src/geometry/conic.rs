//! Points, lines and conics in P², pencils and their base loci.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linalg::{Mat, Mat3, Mat6};
use super::literal::parse_quadratic_form;
use super::quadext::{Field, QuadExt};
use super::{GeometryError, NotGeneralReason};

fn normalize(v: &[QuadExt]) -> Option<Vec<QuadExt>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.inverse().unwrap();
    Some(v.iter().map(|x| x * &inv).collect())
}

fn cross(u: &[QuadExt], v: &[QuadExt]) -> [QuadExt; 3] {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn dot(u: &[QuadExt], v: &[QuadExt]) -> QuadExt {
    u.iter().zip(v).fold(QuadExt::zero(), |acc, (a, b)| &acc + &(a * b))
}

/// A point of P², stored with its first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: [QuadExt; 3],
}

impl ProjPoint {
    pub fn new(coords: [QuadExt; 3]) -> Result<Self, GeometryError> {
        let n = normalize(&coords).ok_or(GeometryError::Zero)?;
        Ok(ProjPoint {
            coords: [n[0].clone(), n[1].clone(), n[2].clone()],
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new([QuadExt::int(x), QuadExt::int(y), QuadExt::int(z)]).expect("nonzero point")
    }

    pub fn coords(&self) -> &[QuadExt; 3] {
        &self.coords
    }

    /// `M·p` for a column vector `p`.
    pub fn transform(&self, m: &Mat3) -> Result<ProjPoint, GeometryError> {
        let v = m.apply(&self.coords);
        ProjPoint::new([v[0].clone(), v[1].clone(), v[2].clone()])
    }

    /// Canonical order on base points: descending in z, then y, then x.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |p: &ProjPoint| [p.coords[2].clone(), p.coords[1].clone(), p.coords[0].clone()];
        key(other).cmp(&key(self))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// True iff the three points lie on a common line.
pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    Mat::from_rows(vec![p.coords.to_vec(), q.coords.to_vec(), r.coords.to_vec()])
        .det()
        .is_zero()
}

/// A line `αX + βY + γZ = 0`, normalized like points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    coeffs: [QuadExt; 3],
}

impl Line {
    pub fn new(coeffs: [QuadExt; 3]) -> Result<Self, GeometryError> {
        let n = normalize(&coeffs).ok_or(GeometryError::Zero)?;
        Ok(Line {
            coeffs: [n[0].clone(), n[1].clone(), n[2].clone()],
        })
    }

    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self, GeometryError> {
        Line::new(cross(&p.coords, &q.coords))
    }

    pub fn coeffs(&self) -> &[QuadExt; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coeffs, &p.coords).is_zero()
    }

    /// Two distinct points spanning the line.
    fn basis(&self) -> (Vec<QuadExt>, Vec<QuadExt>) {
        let k = Mat::from_rows(vec![self.coeffs.to_vec()]).kernel();
        (k[0].clone(), k[1].clone())
    }

    pub fn times(&self, other: &Line) -> Conic {
        let (u, v) = (&self.coeffs, &other.coeffs);
        Conic {
            coeffs: [
                &u[0] * &v[0],
                &u[1] * &v[1],
                &u[2] * &v[2],
                &(&u[1] * &v[2]) + &(&u[2] * &v[1]),
                &(&u[0] * &v[2]) + &(&u[2] * &v[0]),
                &(&u[0] * &v[1]) + &(&u[1] * &v[0]),
            ],
        }
    }
}

fn fmt_form(coeffs: &[QuadExt], monomials: &[&str]) -> String {
    let mut out = String::new();
    for (c, mono) in coeffs.iter().zip(monomials) {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let compound = !c.is_rational() && !c.rational_part().is_zero();
        let body = if c == &QuadExt::one() {
            mono.to_string()
        } else if c == &QuadExt::int(-1) {
            format!("-{mono}")
        } else if compound {
            format!("({s})*{mono}")
        } else {
            format!("{s}*{mono}")
        };
        if out.is_empty() {
            out = body;
        } else if let Some(rest) = body.strip_prefix('-') {
            out = format!("{out} - {rest}");
        } else {
            out = format!("{out} + {body}");
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_form(&self.coeffs, &["X", "Y", "Z"]))
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A plane conic by its coefficients on x², y², z², yz, xz, xy.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Conic {
    coeffs: [QuadExt; 6],
}

const MONOMIALS: [&str; 6] = ["X^2", "Y^2", "Z^2", "YZ", "XZ", "XY"];
/// Index pairs of the basis monomials.
const PAIRS: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1)];

impl Conic {
    pub fn new(coeffs: [QuadExt; 6]) -> Result<Self, GeometryError> {
        if coeffs.iter().all(QuadExt::is_zero) {
            return Err(GeometryError::Zero);
        }
        Ok(Conic { coeffs })
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        Self::new(c.map(QuadExt::int)).expect("nonzero conic")
    }

    /// Parses a literal such as `"c*(X^2+Y^2) + d*Z^2"`, substituting the
    /// given values for `c` and `d`.
    pub fn parse(input: &str, c: &QuadExt, d: &QuadExt) -> Result<Self, GeometryError> {
        Conic::new(parse_quadratic_form(input, c, d)?)
    }

    pub fn coeffs(&self) -> &[QuadExt; 6] {
        &self.coeffs
    }

    /// Symmetric matrix `A` with `f(p) = pᵀ A p`.
    pub fn matrix(&self) -> Mat3 {
        let c = &self.coeffs;
        let h = QuadExt::ratio(1, 2);
        let (yz, xz, xy) = (&c[3] * &h, &c[4] * &h, &c[5] * &h);
        Mat::from_rows(vec![
            vec![c[0].clone(), xy.clone(), xz.clone()],
            vec![xy, c[1].clone(), yz.clone()],
            vec![xz, yz, c[2].clone()],
        ])
    }

    pub fn from_matrix(a: &Mat3) -> Result<Self, GeometryError> {
        let two = QuadExt::int(2);
        Conic::new([
            a.get(0, 0).clone(),
            a.get(1, 1).clone(),
            a.get(2, 2).clone(),
            &two * a.get(1, 2),
            &two * a.get(0, 2),
            &two * a.get(0, 1),
        ])
    }

    pub fn eval(&self, p: &ProjPoint) -> QuadExt {
        self.eval_vec(&p.coords)
    }

    fn eval_vec(&self, v: &[QuadExt]) -> QuadExt {
        PAIRS
            .iter()
            .zip(&self.coeffs)
            .fold(QuadExt::zero(), |acc, (&(i, j), c)| &acc + &(&(c * &v[i]) * &v[j]))
    }

    /// Symmetric bilinear form with `b(v, v) = f(v)`.
    fn polar(&self, u: &[QuadExt], v: &[QuadExt]) -> QuadExt {
        dot(u, &self.matrix().apply(v))
    }

    /// `f ∘ M`, the conic whose points are `M⁻¹` of the points of `f`.
    pub fn pullback(&self, m: &Mat3) -> Conic {
        let v = sym2(&m.transpose()).apply(&self.coeffs);
        Conic {
            coeffs: [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone(), v[5].clone()],
        }
    }

    /// `μ·self + λ·other`.
    pub fn combine(&self, mu: &QuadExt, other: &Conic, lambda: &QuadExt) -> Result<Conic, GeometryError> {
        let mut c = self.coeffs.clone();
        for (x, y) in c.iter_mut().zip(&other.coeffs) {
            *x = &(&*x * mu) + &(y * lambda);
        }
        Conic::new(c)
    }

    pub fn is_proportional(&self, other: &Conic) -> bool {
        Mat::from_rows(vec![self.coeffs.to_vec(), other.coeffs.to_vec()]).rank() < 2
    }

    pub fn is_singular(&self) -> bool {
        self.matrix().det().is_zero()
    }

    /// Restriction to the line through `u` and `v` as the binary form
    /// `f(s u + t v) = a s² + b s t + c t²`.
    fn restrict(&self, u: &[QuadExt], v: &[QuadExt]) -> [QuadExt; 3] {
        [self.eval_vec(u), &QuadExt::int(2) * &self.polar(u, v), self.eval_vec(v)]
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_form(&self.coeffs, &MONOMIALS))
    }
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Action of a 3×3 matrix on conic coefficients: column `j` holds the
/// coefficients of basis monomial `j` after substituting
/// `x_k ↦ Σ_i M[i][k] x_i`. Multiplicative in `M`.
pub fn sym2(m: &Mat3) -> Mat6 {
    let mut out = Mat::zeros(6, 6);
    for (j, &(k, l)) in PAIRS.iter().enumerate() {
        let u = Line {
            coeffs: [m.get(0, k).clone(), m.get(1, k).clone(), m.get(2, k).clone()],
        };
        let v = Line {
            coeffs: [m.get(0, l).clone(), m.get(1, l).clone(), m.get(2, l).clone()],
        };
        let prod = u.times(&v);
        for i in 0..6 {
            out.set(i, j, prod.coeffs[i].clone());
        }
    }
    out
}

/// A singular member `μ f + λ g` of a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodalMember {
    /// `[μ:λ]`, normalized with first nonzero entry 1.
    pub parameter: [BigRational; 2],
    /// Multiplicity as a root of the determinant cubic.
    pub multiplicity: usize,
    pub conic: Conic,
}

impl NodalMember {
    pub fn parameter_string(&self) -> String {
        let s = |r: &BigRational| QuadExt::rational(r.clone()).to_string();
        format!("[{}:{}]", s(&self.parameter[0]), s(&self.parameter[1]))
    }
}

/// Coefficients `[α, β, γ, δ]` of `det(μA + λB) = αμ³ + βμ²λ + γμλ² + δλ³`.
fn determinant_cubic(f: &Conic, g: &Conic) -> [QuadExt; 4] {
    let (a, b) = (f.matrix(), g.matrix());
    let at = |mu: i64, la: i64| {
        let m = Mat::from_rows(
            (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| &(&QuadExt::int(mu) * a.get(i, j)) + &(&QuadExt::int(la) * b.get(i, j)))
                        .collect()
                })
                .collect(),
        );
        m.det()
    };
    let alpha = at(1, 0);
    let delta = at(0, 1);
    let s1 = at(1, 1);
    let s2 = at(1, -1);
    let half = QuadExt::ratio(1, 2);
    // s1 = α+β+γ+δ, s2 = α−β+γ−δ
    let beta_plus_gamma = &(&s1 - &alpha) - &delta;
    let gamma_minus_beta = &(&s2 - &alpha) + &delta;
    let gamma = &(&beta_plus_gamma + &gamma_minus_beta) * &half;
    let beta = &beta_plus_gamma - &gamma;
    [alpha, beta, gamma, delta]
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, GeometryError> {
    let n = n.abs();
    if n > BigInt::from(10u64.pow(12)) {
        return Err(GeometryError::OutOfScope(format!("coefficient {n} too large for root search")));
    }
    let n = n.to_u64().unwrap();
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(BigInt::from(i));
            if i * i != n {
                out.push(BigInt::from(n / i));
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Rational roots with multiplicity of an integer polynomial (coefficients
/// from the constant term up), found with the rational root theorem.
fn rational_roots(mut poly: Vec<BigInt>) -> Result<Vec<(BigRational, usize)>, GeometryError> {
    let mut roots: Vec<(BigRational, usize)> = Vec::new();
    let push = |roots: &mut Vec<(BigRational, usize)>, r: BigRational| match roots.iter_mut().find(|(x, _)| *x == r) {
        Some(e) => e.1 += 1,
        None => roots.push((r, 1)),
    };
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        push(&mut roots, BigRational::zero());
    }
    'outer: while poly.len() > 1 {
        let lead = poly.last().unwrap().clone();
        for p in divisors(&poly[0])? {
            for q in divisors(&lead)? {
                for sign in [1, -1] {
                    let r = BigRational::new(&p * sign, q.clone());
                    // Horner with synthetic division
                    let mut acc = BigRational::zero();
                    let mut quotient = Vec::with_capacity(poly.len() - 1);
                    for c in poly.iter().rev() {
                        acc = acc * &r + BigRational::from_integer(c.clone());
                        quotient.push(acc.clone());
                    }
                    if acc.is_zero() {
                        quotient.pop();
                        quotient.reverse();
                        // clear denominators again
                        let den = quotient.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
                        poly = quotient
                            .iter()
                            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                            .collect();
                        push(&mut roots, r);
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    Ok(roots)
}

/// The singular members of the pencil spanned by `f` and `g`.
pub fn nodal_members(f: &Conic, g: &Conic) -> Result<Vec<NodalMember>, GeometryError> {
    if f.is_proportional(g) {
        return Err(GeometryError::NotAPencil);
    }
    let cubic = determinant_cubic(f, g);
    if cubic.iter().all(QuadExt::is_zero) {
        return Err(GeometryError::AllMembersSingular);
    }
    let rat: Vec<BigRational> = cubic
        .iter()
        .map(|c| {
            c.as_rational().cloned().ok_or_else(|| {
                GeometryError::OutOfScope("determinant cubic with irrational coefficients".into())
            })
        })
        .collect::<Result<_, _>>()?;
    let den = rat.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = rat
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let mut members: Vec<(BigRational, BigRational, usize)> = Vec::new();
    // λ = 0 roots: leading μ³ coefficients vanishing
    let at_infinity = ints.iter().take_while(|c| c.is_zero()).count();
    if at_infinity > 0 {
        members.push((BigRational::one(), BigRational::zero(), at_infinity));
    }
    // remaining roots t = μ/λ of αt³ + βt² + γt + δ (constant term first)
    let dehomog: Vec<BigInt> = ints[at_infinity..].iter().rev().cloned().collect();
    let mut finite = rational_roots(dehomog)?;
    finite.sort_by(|a, b| a.0.cmp(&b.0));
    let found: usize = at_infinity + finite.iter().map(|r| r.1).sum::<usize>();
    if found < 3 {
        return Err(GeometryError::IrrationalNodalParameter(format!(
            "{} of 3 roots rational for cubic {:?}",
            found, cubic
        )));
    }
    for (t, mult) in finite {
        members.push((t, BigRational::one(), mult));
    }
    members
        .into_iter()
        .map(|(mu, la, multiplicity)| {
            let param = if mu.is_zero() {
                [BigRational::zero(), BigRational::one()]
            } else {
                [BigRational::one(), &la / &mu]
            };
            let conic = f.combine(&QuadExt::rational(mu), g, &QuadExt::rational(la))?;
            Ok(NodalMember {
                parameter: param,
                multiplicity,
                conic,
            })
        })
        .collect()
}

/// A singular conic split into its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degenerate {
    LinePair(Line, Line),
    DoubleLine(Line),
}

/// Projective roots `(s:t)` of `a s² + b s t + c t²` (not all zero).
fn binary_roots(q: &[QuadExt; 3], field: &mut Field) -> Result<Vec<[QuadExt; 2]>, GeometryError> {
    let [a, b, c] = q;
    if a.is_zero() {
        // t (b s + c t) = 0
        let mut out = vec![[QuadExt::one(), QuadExt::zero()]];
        if !b.is_zero() {
            out.push([-c, b.clone()]);
        } else {
            out.push([QuadExt::one(), QuadExt::zero()]);
        }
        return Ok(out);
    }
    let disc = &(b * b) - &(&QuadExt::int(4) * &(a * c));
    let root = field.sqrt(&disc)?;
    let two_a = &QuadExt::int(2) * a;
    Ok(vec![
        [&(&(-b) + &root) / &two_a, QuadExt::one()],
        [&(&(-b) - &root) / &two_a, QuadExt::one()],
    ])
}

fn combine_points(u: &[QuadExt], v: &[QuadExt], st: &[QuadExt; 2]) -> Result<ProjPoint, GeometryError> {
    ProjPoint::new([0, 1, 2].map(|i| &(&st[0] * &u[i]) + &(&st[1] * &v[i])))
}

/// Splits a singular conic into lines, adjoining a square root to `field`
/// when needed.
pub fn factor_degenerate(c: &Conic, field: &mut Field) -> Result<Degenerate, GeometryError> {
    let a = c.matrix();
    match a.rank() {
        3 => Err(GeometryError::NotDegenerate),
        1 => {
            let i = (0..3).find(|&i| a.row(i).iter().any(|x| !x.is_zero())).unwrap();
            let row = a.row(i);
            Ok(Degenerate::DoubleLine(Line::new([row[0].clone(), row[1].clone(), row[2].clone()])?))
        }
        2 => {
            let vertex = a.kernel().remove(0);
            let p = ProjPoint::new([vertex[0].clone(), vertex[1].clone(), vertex[2].clone()])?;
            // a coordinate line missing the vertex
            let j = (0..3).find(|&j| !vertex[j].is_zero()).unwrap();
            let (k, l) = match j {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let mut u = vec![QuadExt::zero(); 3];
            let mut v = vec![QuadExt::zero(); 3];
            u[k] = QuadExt::one();
            v[l] = QuadExt::one();
            let roots = binary_roots(&c.restrict(&u, &v), field)?;
            let r1 = combine_points(&u, &v, &roots[0])?;
            let r2 = combine_points(&u, &v, &roots[1])?;
            let mut lines = [Line::through(&p, &r1)?, Line::through(&p, &r2)?];
            lines.sort_by(|x, y| x.coeffs.cmp(&y.coeffs));
            let [l1, l2] = lines;
            Ok(Degenerate::LinePair(l1, l2))
        }
        _ => Err(GeometryError::Zero),
    }
}

/// Four base points of a general pencil and the field that holds them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseLocus {
    pub points: Vec<ProjPoint>,
    pub field: Field,
}

/// Base points of the pencil `⟨f, g⟩`, found by splitting a singular member
/// into lines and cutting each line with the other generator.
pub fn base_locus(f: &Conic, g: &Conic) -> Result<BaseLocus, GeometryError> {
    if f.is_proportional(g) {
        return Err(GeometryError::NotAPencil);
    }
    let member = match nodal_members(f, g) {
        Ok(ms) => ms.into_iter().next().unwrap().conic,
        Err(GeometryError::AllMembersSingular) => f.clone(),
        Err(e) => return Err(e),
    };
    let other = if member.is_proportional(f) { g } else { f };
    let mut field = Field::rational();
    let lines = match factor_degenerate(&member, &mut field)? {
        Degenerate::LinePair(a, b) => vec![a, b],
        Degenerate::DoubleLine(a) => vec![a],
    };
    let mut points: Vec<ProjPoint> = Vec::new();
    for line in &lines {
        let (u, v) = line.basis();
        let q = other.restrict(&u, &v);
        if q.iter().all(QuadExt::is_zero) {
            return Err(GeometryError::NotGeneral(NotGeneralReason::CommonComponent));
        }
        if q[0].is_zero() && q[1].is_zero() {
            // t² = 0: a double root at (1:0)
            return Err(GeometryError::NotGeneral(NotGeneralReason::RepeatedBasePoint));
        }
        let roots = binary_roots(&q, &mut field)?;
        for st in &roots {
            points.push(combine_points(&u, &v, st)?);
        }
    }
    if lines.len() == 1 {
        return Err(GeometryError::NotGeneral(NotGeneralReason::RepeatedBasePoint));
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            if points[i] == points[j] {
                return Err(GeometryError::NotGeneral(NotGeneralReason::RepeatedBasePoint));
            }
        }
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            for k in (j + 1)..4 {
                if collinear(&points[i], &points[j], &points[k]) {
                    return Err(GeometryError::NotGeneral(NotGeneralReason::ThreeCollinear));
                }
            }
        }
    }
    for p in &points {
        debug_assert!(f.eval(p).is_zero() && g.eval(p).is_zero(), "{p} is not a base point");
    }
    points.sort_by(|a, b| a.canonical_cmp(b));
    Ok(BaseLocus { points, field })
}

/// Two conics spanning the conics through the given points; needs exactly
/// a 2-dimensional solution space.
pub fn pencil_through(points: &[ProjPoint]) -> Result<(Conic, Conic), GeometryError> {
    let rows = points
        .iter()
        .map(|p| PAIRS.iter().map(|&(i, j)| &p.coords[i] * &p.coords[j]).collect())
        .collect();
    let kernel = Mat::from_rows(rows).kernel();
    if kernel.len() != 2 {
        return Err(GeometryError::NotGeneral(NotGeneralReason::ThreeCollinear));
    }
    let to_conic = |v: &Vec<QuadExt>| {
        Conic::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone(), v[5].clone()])
    };
    Ok((to_conic(&kernel[0])?, to_conic(&kernel[1])?))
}

/// True iff `⟨f, g⟩` and `⟨f2, g2⟩` are the same 2-dimensional space.
pub fn same_span(f: &Conic, g: &Conic, f2: &Conic, g2: &Conic) -> bool {
    let rank = |cs: &[&Conic]| Mat::from_rows(cs.iter().map(|c| c.coeffs.to_vec()).collect()).rank();
    rank(&[f, g]) == 2 && rank(&[f2, g2]) == 2 && rank(&[f, g, f2, g2]) == 2
}

/// True iff every matrix maps the pencil `⟨f, g⟩` to itself.
pub fn pencil_invariant(matrices: &[Mat3], f: &Conic, g: &Conic) -> bool {
    matrices
        .iter()
        .all(|m| same_span(f, g, &f.pullback(m), &g.pullback(m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conic(s: &str) -> Conic {
        Conic::parse(s, &QuadExt::one(), &QuadExt::one()).unwrap()
    }

    #[test]
    fn collinearity() {
        assert!(collinear(
            &ProjPoint::from_ints(1, 0, 0),
            &ProjPoint::from_ints(0, 1, 0),
            &ProjPoint::from_ints(1, 1, 0)
        ));
        assert!(!collinear(
            &ProjPoint::from_ints(1, 0, 0),
            &ProjPoint::from_ints(0, 1, 0),
            &ProjPoint::from_ints(0, 0, 1)
        ));
    }

    #[test]
    fn points_are_normalized() {
        let p = ProjPoint::new([QuadExt::int(-3), QuadExt::int(-2), QuadExt::int(-1)]).unwrap();
        assert_eq!(p, ProjPoint::new([QuadExt::one(), QuadExt::ratio(2, 3), QuadExt::ratio(1, 3)]).unwrap());
        assert_eq!(p.to_string(), "[1:2/3:1/3]");
        assert!(ProjPoint::new([QuadExt::zero(), QuadExt::zero(), QuadExt::zero()]).is_err());
        let q = ProjPoint::new([QuadExt::one(), QuadExt::one(), QuadExt::sqrt_of(-2)]).unwrap();
        assert_eq!(q.to_string(), "[1:1:sqrt(-2)]");
    }

    #[test]
    fn matrix_round_trip() {
        let c = conic("X^2 + 2Y^2 - Z^2 + 3YZ - XZ + 4XY");
        assert_eq!(Conic::from_matrix(&c.matrix()).unwrap(), c);
        let p = ProjPoint::from_ints(1, 2, 3);
        // 1 + 8 - 9 + 18 - 3 + 8
        assert_eq!(c.eval(&p), QuadExt::int(23));
    }

    #[test]
    fn sym2_of_identity_and_products() {
        assert_eq!(sym2(&Mat::identity(3)), Mat::identity(6));
        let m = Mat::from_ints(&[[1, 2, 0], [0, 1, 3], [1, 0, 1]]);
        let n = Mat::from_ints(&[[0, -1, 1], [2, 0, 0], [1, 1, 1]]);
        assert_eq!(sym2(&(&m * &n)), &sym2(&m) * &sym2(&n));
    }

    #[test]
    fn pullback_matches_substitution() {
        // f = X^2 + YZ, M = [[1,1,0],[0,1,0],[0,0,2]]; f(Mx) = (x+y)^2 + y·2z
        let f = conic("X^2 + YZ");
        let m = Mat::from_ints(&[[1, 1, 0], [0, 1, 0], [0, 0, 2]]);
        assert_eq!(f.pullback(&m), conic("X^2 + 2XY + Y^2 + 2YZ"));
        let p = ProjPoint::from_ints(3, -1, 2);
        let mp = m.apply(p.coords());
        assert_eq!(f.pullback(&m).eval(&p), f.eval_vec(&mp));
    }

    #[test]
    fn factoring() {
        let mut field = Field::rational();
        match factor_degenerate(&conic("X^2 - Y^2"), &mut field).unwrap() {
            Degenerate::LinePair(a, b) => {
                let prod = a.times(&b);
                assert!(prod.is_proportional(&conic("X^2 - Y^2")));
                let names = [a.to_string(), b.to_string()];
                assert!(names.contains(&"X - Y".to_string()) && names.contains(&"X + Y".to_string()), "{names:?}");
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            factor_degenerate(&conic("Z^2"), &mut field).unwrap(),
            Degenerate::DoubleLine(Line::new([QuadExt::zero(), QuadExt::zero(), QuadExt::one()]).unwrap())
        );
        assert_eq!(factor_degenerate(&conic("X^2+Y^2+Z^2"), &mut field), Err(GeometryError::NotDegenerate));

        // Z^2 + 2X^2 splits over Q(sqrt(-2)) into Z ± sqrt(-2) X
        let mut f2 = Field::rational();
        let c = conic("Z^2 + 2X^2");
        match factor_degenerate(&c, &mut f2).unwrap() {
            Degenerate::LinePair(a, b) => {
                assert_eq!(f2.radicand(), -2);
                assert!(a.times(&b).is_proportional(&c));
                let s = QuadExt::sqrt_of(-2);
                let expected = [
                    Line::new([s.clone(), QuadExt::zero(), QuadExt::one()]).unwrap(),
                    Line::new([-&s, QuadExt::zero(), QuadExt::one()]).unwrap(),
                ];
                assert!(expected.contains(&a) && expected.contains(&b));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nodal_members_of_simple_pencils() {
        let ms = nodal_members(&conic("Z^2"), &conic("XY")).unwrap();
        let params: Vec<String> = ms.iter().map(|m| m.parameter_string()).collect();
        assert_eq!(params, vec!["[1:0]", "[0:1]"]);
        assert_eq!(ms[0].multiplicity, 2);
        for m in &ms {
            assert!(m.conic.matrix().rank() <= 2);
        }
        assert_eq!(nodal_members(&conic("XY"), &conic("XZ")), Err(GeometryError::AllMembersSingular));
        assert_eq!(nodal_members(&conic("XY"), &conic("2XY")), Err(GeometryError::NotAPencil));
        // det(μI + λB) = μ(μ² + μλ − λ²) has two irrational roots
        let irr = nodal_members(&conic("X^2 + Y^2 + Z^2"), &conic("X^2 + 2XY"));
        assert!(matches!(irr, Err(GeometryError::IrrationalNodalParameter(_))), "{irr:?}");
    }

    #[test]
    fn rational_root_search() {
        // (t - 1/2)(t + 3)^2 = t^3 + 11/2 t^2 + 6 t - 9/2 -> 2t^3 + 11t^2 + 12t - 9
        let roots = rational_roots(vec![(-9).into(), 12.into(), 11.into(), 2.into()]).unwrap();
        assert!(roots.contains(&(BigRational::new(1.into(), 2.into()), 1)));
        assert!(roots.contains(&(BigRational::from_integer((-3).into()), 2)));
        let none = rational_roots(vec![(-2).into(), 0.into(), 1.into()]).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn base_locus_of_a_general_pencil() {
        let pts = [(1, 1, 1), (1, -1, 1), (1, 1, -1), (-1, 1, 1)].map(|(x, y, z)| ProjPoint::from_ints(x, y, z));
        let (f, g) = pencil_through(&pts).unwrap();
        let locus = base_locus(&f, &g).unwrap();
        assert_eq!(locus.points.len(), 4);
        for p in &pts {
            assert!(locus.points.contains(p));
        }
        assert_eq!(locus.field.radicand(), 1);
        let (f2, g2) = pencil_through(&locus.points).unwrap();
        assert!(same_span(&f, &g, &f2, &g2));
    }

    #[test]
    fn degenerate_pencils() {
        let ng = |a: &str, b: &str| base_locus(&conic(a), &conic(b));
        assert_eq!(ng("YZ", "XZ"), Err(GeometryError::NotGeneral(NotGeneralReason::CommonComponent)));
        assert_eq!(ng("Z^2", "X^2-Y^2"), Err(GeometryError::NotGeneral(NotGeneralReason::RepeatedBasePoint)));
        assert_eq!(ng("X^2-Y^2", "X^2+Y^2"), Err(GeometryError::NotGeneral(NotGeneralReason::RepeatedBasePoint)));
        // the double line X = 0 meets the circle only at [0:1:±1], each twice
        assert_eq!(
            ng("X^2 + Y^2 - Z^2", "X^2"),
            Err(GeometryError::NotGeneral(NotGeneralReason::RepeatedBasePoint))
        );
    }

    #[test]
    fn invariance_checks() {
        let f = conic("X^2 - Y^2");
        let g = conic("X^2 + Y^2 + Z^2");
        assert!(pencil_invariant(&[Mat::identity(3)], &f, &g));
        let swap = Mat::from_ints(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert!(pencil_invariant(std::slice::from_ref(&swap), &f, &g));
        assert!(!pencil_invariant(&[swap], &conic("X^2"), &conic("YZ")));
    }
}
