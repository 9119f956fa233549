//! Parser for conic literals such as `"X^2 - Y^2"`, `"YZ"` or
//! `"c*(X^2+Y^2) + d*Z^2"`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::quadext::QuadExt;
use super::GeometryError;

type Poly = BTreeMap<[u32; 3], QuadExt>;

fn constant(v: QuadExt) -> Poly {
    let mut p = Poly::new();
    if !v.is_zero() {
        p.insert([0, 0, 0], v);
    }
    p
}

fn add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let mut out = a.clone();
    let s = QuadExt::int(sign);
    for (k, v) in b {
        let e = out.entry(*k).or_insert_with(QuadExt::zero);
        *e = &*e + &(&s * v);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let k = [ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]];
            let e = out.entry(k).or_insert_with(QuadExt::zero);
            *e = &*e + &(va * vb);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
    c: &'a QuadExt,
    d: &'a QuadExt,
}

impl Parser<'_> {
    fn err<T>(&self) -> Result<T, GeometryError> {
        let token = self.chars.get(self.pos).map_or("end of input".to_string(), |c| c.to_string());
        Err(GeometryError::Parse {
            input: self.input.to_string(),
            token,
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly, GeometryError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                add(&Poly::new(), &self.term()?, -1)
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = add(&acc, &self.term()?, 1);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = add(&acc, &self.term()?, -1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, GeometryError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = mul(&acc, &self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let den = self.power()?;
                    let inv = match den.get(&[0, 0, 0]) {
                        Some(v) if den.len() == 1 => v.inverse(),
                        _ => None,
                    };
                    match inv {
                        Some(i) => acc = mul(&acc, &constant(i)),
                        None => return self.err(),
                    }
                }
                // implicit product, as in "XY" or "2X^2"
                Some(ch) if ch.is_ascii_alphanumeric() || ch == '(' => {
                    acc = mul(&acc, &self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly, GeometryError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err();
            }
            let e: u32 = self.chars[start..self.pos].iter().collect::<String>().parse().unwrap_or(99);
            if e > 2 {
                self.pos = start;
                return self.err();
            }
            return Ok((0..e).fold(constant(QuadExt::one()), |acc, _| mul(&acc, &base)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, GeometryError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err();
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(ch) if ch.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let n: BigInt = self.chars[start..self.pos].iter().collect::<String>().parse().unwrap();
                Ok(constant(QuadExt::rational(BigRational::from_integer(n))))
            }
            Some(ch) => {
                let var = match ch {
                    'X' | 'x' => Some(0),
                    'Y' | 'y' => Some(1),
                    'Z' | 'z' => Some(2),
                    _ => None,
                };
                self.pos += 1;
                if let Some(i) = var {
                    let mut k = [0, 0, 0];
                    k[i] = 1;
                    return Ok(BTreeMap::from([(k, QuadExt::one())]));
                }
                match ch {
                    'c' => Ok(constant(self.c.clone())),
                    'd' => Ok(constant(self.d.clone())),
                    _ => {
                        self.pos -= 1;
                        self.err()
                    }
                }
            }
            None => self.err(),
        }
    }
}

/// Coefficients in the order x², y², z², yz, xz, xy.
pub(crate) fn parse_quadratic_form(input: &str, c: &QuadExt, d: &QuadExt) -> Result<[QuadExt; 6], GeometryError> {
    let mut p = Parser {
        input,
        chars: input.chars().collect(),
        pos: 0,
        c,
        d,
    };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.err();
    }
    let slots = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [0, 1, 1], [1, 0, 1], [1, 1, 0]];
    for k in poly.keys() {
        if k.iter().sum::<u32>() != 2 {
            return Err(GeometryError::Parse {
                input: input.to_string(),
                token: format!("term of degree {}", k.iter().sum::<u32>()),
            });
        }
    }
    Ok(slots.map(|k| poly.get(&k).cloned().unwrap_or_else(QuadExt::zero)))
}
