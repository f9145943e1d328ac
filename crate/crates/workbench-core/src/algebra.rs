#![allow(clippy::needless_range_loop)] // row/column elimination reads clearest with indices

//! The group algebra over the coefficient field: convolution product,
//! central idempotents from characters, block dimensions, the hand-written
//! idempotents of the order-6 subgroup with their 2x2 matrix realisation,
//! the fermionic block projectors, the complex-structure element, the
//! gamma-relation comparison table, and the Wedderburn chain of the
//! quotient algebras.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::chartab::{
    character_table, real_wedderburn, CharError, Character, CharacterTable, WedderburnType,
};
use crate::exact::{rat, rat_int, Cyclotomic, ExactMatrix, Rational};
use crate::group::{FiniteGroup, GroupError};
use crate::octa::{self, GroupContext};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("relation failed at basis pair ({x}, {y})")]
    RelationFailure { x: String, y: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
}

/// A formal linear combination of group elements; no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: BTreeMap<u32, Cyclotomic>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(id: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(id, Cyclotomic::one());
        AlgebraElement { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Cyclotomic)>) -> Self {
        let mut out = AlgebraElement::zero();
        for (id, value) in terms {
            out.add_term(id, &value);
        }
        out
    }

    /// Builds `Σ coeff·word` over a context's named elements.
    pub fn from_words(ctx: &GroupContext, terms: &[(Rational, &str)]) -> Result<Self, GroupError> {
        let mut out = AlgebraElement::zero();
        for (coeff, word) in terms {
            let id = ctx.group.eval_word(&ctx.names, word)?;
            out.add_term(id, &Cyclotomic::from_rational(coeff.clone()));
        }
        Ok(out)
    }

    fn add_term(&mut self, id: u32, value: &Cyclotomic) {
        if value.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&id) {
            Some(current) => {
                *current = &*current + value;
                if current.is_zero() {
                    self.coeffs.remove(&id);
                }
            }
            None => {
                self.coeffs.insert(id, value.clone());
            }
        }
    }

    pub fn coeff(&self, id: u32) -> Cyclotomic {
        self.coeffs
            .get(&id)
            .cloned()
            .unwrap_or_else(Cyclotomic::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&u32, &Cyclotomic)> {
        self.coeffs.iter()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (id, value) in &other.coeffs {
            out.add_term(*id, value);
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|(id, v)| (*id, -v)).collect(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|(id, v)| (*id, v.mul(s))).collect(),
        }
    }

    pub fn scale_rational(&self, s: &Rational) -> AlgebraElement {
        self.scale(&Cyclotomic::from_rational(s.clone()))
    }

    /// Convolution: `(ab)(g) = Σ_{xy = g} a(x)·b(y)`.
    pub fn convolve(&self, g: &FiniteGroup, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (x, cx) in &self.coeffs {
            for (y, cy) in &other.coeffs {
                out.add_term(g.mul(*x, *y), &cx.mul(cy));
            }
        }
        out
    }

    /// True when all coefficients are fixed by conjugation (lie in the real
    /// subfield).
    pub fn has_real_coefficients(&self) -> bool {
        self.coeffs.values().all(Cyclotomic::is_real)
    }

    /// True when all coefficients are rational.
    pub fn has_rational_coefficients(&self) -> bool {
        self.coeffs.values().all(|v| v.as_rational().is_some())
    }

    /// Commutes with every basis element.
    pub fn is_central(&self, g: &FiniteGroup) -> bool {
        (0..g.order() as u32).all(|x| {
            let b = AlgebraElement::basis(x);
            self.convolve(g, &b) == b.convolve(g, self)
        })
    }

    /// Deterministic rendering with display names.
    pub fn render(&self, g: &FiniteGroup) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(id, v)| format!("({})·{}", v.to_pretty_string(), g.display(*id)))
            .collect();
        parts.join(" + ")
    }
}

/// `e_chi = (deg/|G|)·Σ_g chi(g⁻¹)·g`.
pub fn central_idempotent(g: &FiniteGroup, chi: &Character) -> AlgebraElement {
    let deg = chi.degree(g);
    let scale = deg / rat_int(g.order() as i64);
    AlgebraElement::from_terms((0..g.order() as u32).map(|x| {
        let value = chi.values[g.class_of(g.inv(x))].scale(&scale);
        (x, value)
    }))
}

/// The projector `(1 - z)/2` onto the part where the central involution `z`
/// acts as `-1`.
pub fn fermionic_projector(ctx: &GroupContext) -> AlgebraElement {
    AlgebraElement::basis(0)
        .sub(&AlgebraElement::basis(ctx.id("-1")))
        .scale_rational(&rat(1, 2))
}

/// Dimension over the field of the right ideal `span{e·x : x}` of an
/// idempotent, via exact rank. Equals degree² for a central primitive
/// idempotent.
pub fn block_dimension(g: &FiniteGroup, e: &AlgebraElement) -> usize {
    let n = g.order();
    // Row x holds the coefficients of e·basis(x): the value at column h is
    // e(h·x⁻¹).
    let translated = ExactMatrix::from_fn(n, n, |row, col| {
        e.coeff(g.mul(col as u32, g.inv(row as u32)))
    });
    translated.rank()
}

/// The two displayed projector formulas for the fermionic part, applied
/// after the projector `(1 - z)/2`:
/// `(4 + w(1+i+j+k) + w²(1-i-j-k))/6` and
/// `(4 - 2w(1+i+j+k) - 2w²(1-i-j-k))/6`.
pub fn mass_projector_formula(ctx: &GroupContext) -> AlgebraElement {
    let terms: Vec<(Rational, &str)> = vec![
        (rat_int(4), "1"),
        (rat_int(1), "w"),
        (rat_int(1), "wi"),
        (rat_int(1), "wj"),
        (rat_int(1), "wk"),
        (rat_int(1), "w2"),
        (rat_int(-1), "w2i"),
        (rat_int(-1), "w2j"),
        (rat_int(-1), "w2k"),
    ];
    let raw = AlgebraElement::from_words(ctx, &terms).expect("fixed words");
    fermionic_projector(ctx)
        .convolve(&ctx.group, &raw)
        .scale_rational(&rat(1, 6))
}

pub fn spinor_projector_formula(ctx: &GroupContext) -> AlgebraElement {
    let terms: Vec<(Rational, &str)> = vec![
        (rat_int(4), "1"),
        (rat_int(-2), "w"),
        (rat_int(-2), "wi"),
        (rat_int(-2), "wj"),
        (rat_int(-2), "wk"),
        (rat_int(-2), "w2"),
        (rat_int(2), "w2i"),
        (rat_int(2), "w2j"),
        (rat_int(2), "w2k"),
    ];
    let raw = AlgebraElement::from_words(ctx, &terms).expect("fixed words");
    fermionic_projector(ctx)
        .convolve(&ctx.group, &raw)
        .scale_rational(&rat(1, 6))
}

/// The three idempotents of the order-6 subgroup, as written:
/// `p = (1+w+w²+d+wd+w²d)/6`, `q = (1+w+w²-d-wd-w²d)/6`, `r = (2-w-w²)/3`.
#[derive(Debug, Clone)]
pub struct LeptonIdempotents {
    pub p: AlgebraElement,
    pub q: AlgebraElement,
    pub r: AlgebraElement,
}

pub fn lepton_idempotents(k: &GroupContext) -> LeptonIdempotents {
    let sixth = rat(1, 6);
    let p = AlgebraElement::from_words(
        k,
        &[
            (sixth.clone(), "1"),
            (sixth.clone(), "w"),
            (sixth.clone(), "w2"),
            (sixth.clone(), "d"),
            (sixth.clone(), "wd"),
            (sixth.clone(), "w2d"),
        ],
    )
    .expect("fixed words");
    let q = AlgebraElement::from_words(
        k,
        &[
            (sixth.clone(), "1"),
            (sixth.clone(), "w"),
            (sixth.clone(), "w2"),
            (-sixth.clone(), "d"),
            (-sixth.clone(), "wd"),
            (-sixth, "w2d"),
        ],
    )
    .expect("fixed words");
    let r = AlgebraElement::from_words(
        k,
        &[(rat(2, 3), "1"), (rat(-1, 3), "w"), (rat(-1, 3), "w2")],
    )
    .expect("fixed words");
    LeptonIdempotents { p, q, r }
}

/// The verified 2x2 matrix realisation of the block `r·QK`: the map sends
/// `rd` to `diag(1,-1)` and `r(w-w²)/sqrt3` to `[[0,1],[-1,0]]` and extends
/// linearly over the basis `{r, t, rd, td}`.
#[derive(Debug, Clone)]
pub struct LeptonMatrixIso {
    pub basis: Vec<(String, AlgebraElement)>,
    pub images: Vec<ExactMatrix>,
}

pub fn lepton_m2_isomorphism(k: &GroupContext) -> Result<LeptonMatrixIso, AlgebraError> {
    let grp = &k.group;
    let idem = lepton_idempotents(k);
    let d = AlgebraElement::basis(k.id("d"));
    let w = AlgebraElement::basis(k.id("w"));
    let w2 = AlgebraElement::basis(grp.mul(k.id("w"), k.id("w")));
    let inv_sqrt3 = Cyclotomic::sqrt3().inv().expect("sqrt3 invertible");
    let t = idem.r.convolve(grp, &w.sub(&w2)).scale(&inv_sqrt3);
    let rd = idem.r.convolve(grp, &d);
    let td = t.convolve(grp, &d);

    let e_mat = ExactMatrix::parse_rows(&[&["1", "0"], &["0", "-1"]]).unwrap();
    let f_mat = ExactMatrix::parse_rows(&[&["0", "1"], &["-1", "0"]]).unwrap();
    let basis = vec![
        ("r".to_string(), idem.r.clone()),
        ("t".to_string(), t.clone()),
        ("rd".to_string(), rd.clone()),
        ("td".to_string(), td.clone()),
    ];
    let images = vec![
        ExactMatrix::identity(2),
        f_mat.clone(),
        e_mat.clone(),
        f_mat.mul(&e_mat),
    ];

    // The images must span the full 2x2 matrix algebra.
    let span = ExactMatrix::from_fn(4, 4, |row, col| images[row].at(col / 2, col % 2).clone());
    if span.rank() != 4 {
        return Err(AlgebraError::RelationFailure {
            x: "span".into(),
            y: "M2".into(),
        });
    }

    // Multiplicativity on all 16 basis pairs: expand each product in the
    // basis and compare with the matrix product.
    for (xi, (xname, x)) in basis.iter().enumerate() {
        for (yi, (yname, y)) in basis.iter().enumerate() {
            let product = x.convolve(grp, y);
            let coords = express_in_span(grp, &basis, &product).ok_or_else(|| {
                AlgebraError::RelationFailure {
                    x: xname.clone(),
                    y: yname.clone(),
                }
            })?;
            let mut image = ExactMatrix::zero(2, 2);
            for (c, img) in coords.iter().zip(images.iter()) {
                image = image.add(&img.scale(c));
            }
            if image != images[xi].mul(&images[yi]) {
                return Err(AlgebraError::RelationFailure {
                    x: xname.clone(),
                    y: yname.clone(),
                });
            }
        }
    }
    Ok(LeptonMatrixIso { basis, images })
}

/// Writes `target` as a linear combination of the given algebra elements,
/// when possible.
fn express_in_span(
    g: &FiniteGroup,
    basis: &[(String, AlgebraElement)],
    target: &AlgebraElement,
) -> Option<Vec<Cyclotomic>> {
    let n = g.order();
    let cols = basis.len();
    let m = ExactMatrix::from_fn(n, cols + 1, |row, col| {
        if col < cols {
            basis[col].1.coeff(row as u32)
        } else {
            target.coeff(row as u32)
        }
    });
    // Solve by elimination on the augmented matrix.
    let mut rows: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|r| (0..cols + 1).map(|c| m.at(r, c).clone()).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("pivot nonzero");
        for c in 0..cols + 1 {
            rows[rank][c] = rows[rank][c].mul(&inv);
        }
        for r in 0..n {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..cols + 1 {
                    let delta = rows[rank][c].mul(&f);
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // Inconsistent if any zero-row has nonzero rhs.
    for r in rank..n {
        if !rows[r][cols].is_zero() {
            return None;
        }
    }
    let mut coords = vec![Cyclotomic::zero(); cols];
    for (row, col) in pivots {
        coords[col] = rows[row][cols].clone();
    }
    Some(coords)
}

/// Report for the complex-structure element
/// `±((j-k) + (i-j)w + (k-i)w²)d`, fermionically projected and scaled.
#[derive(Debug, Clone)]
pub struct ComplexStructureReport {
    /// The unscaled, fermionically projected element.
    pub iota0: AlgebraElement,
    /// The block idempotent `e(2+) + e(2-)`.
    pub block: AlgebraElement,
    /// `iota·e = iota`.
    pub lies_in_block: bool,
    /// Commutes with `e·g·e` for every basis element `g`.
    pub commutes_with_corner: bool,
    /// Whether `iota² = -e` already holds with the displayed scalar
    /// `1/(6·sqrt2)`.
    pub displayed_scalar_squares: bool,
    /// The scalar `c > 0` with `(c·iota0)² = -e`, when one exists in the
    /// field.
    pub solved_scalar: Option<Cyclotomic>,
}

/// Square-root of a positive rational inside the field, when the squarefree
/// part is 1, 2, 3 or 6.
pub fn sqrt_in_field(r: &Rational) -> Option<Cyclotomic> {
    if r.is_negative() || r.is_zero() {
        return None;
    }
    let n = r.numer().clone() * r.denom().clone();
    // sqrt(n/d) = sqrt(n·d)/d
    let mut m: BigInt = n;
    let mut square_part = BigInt::one();
    let mut squarefree = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= m {
        let mut count = 0;
        while (&m % &f).is_zero() {
            m /= &f;
            count += 1;
        }
        for _ in 0..count / 2 {
            square_part *= &f;
        }
        if count % 2 == 1 {
            squarefree *= &f;
        }
        f += 1;
    }
    if m > BigInt::one() {
        squarefree *= &m;
    }
    let root = match squarefree.to_u32()? {
        1 => Cyclotomic::one(),
        2 => Cyclotomic::sqrt2(),
        3 => Cyclotomic::sqrt3(),
        6 => Cyclotomic::sqrt6(),
        _ => return None,
    };
    let scale = Rational::new(square_part, r.denom().clone());
    Some(root.scale(&scale))
}

pub fn complex_structure_check(
    g: &GroupContext,
    table: &CharacterTable,
    sign: i64,
) -> Result<ComplexStructureReport, AlgebraError> {
    let grp = &g.group;
    // Words compose with the d factor first: the element is
    // d(j-k) + dw(i-j) + dw²(k-i), which is supported on the two order-8
    // classes (the letter-by-letter left-to-right products scatter across
    // classes and are not central).
    let raw = AlgebraElement::from_words(
        g,
        &[
            (rat_int(sign), "dj"),
            (rat_int(-sign), "dk"),
            (rat_int(sign), "dwi"),
            (rat_int(-sign), "dwj"),
            (rat_int(sign), "dw2k"),
            (rat_int(-sign), "dw2i"),
        ],
    )?;
    let iota0 = fermionic_projector(g).convolve(grp, &raw);
    let two_plus = table.by_label("2+").expect("aligned table");
    let two_minus = table.by_label("2-").expect("aligned table");
    let block = central_idempotent(grp, two_plus).add(&central_idempotent(grp, two_minus));

    let lies_in_block = iota0.convolve(grp, &block) == iota0;
    let commutes_with_corner = (0..grp.order() as u32).all(|x| {
        let corner = block
            .convolve(grp, &AlgebraElement::basis(x))
            .convolve(grp, &block);
        iota0.convolve(grp, &corner) == corner.convolve(grp, &iota0)
    });

    let square = iota0.convolve(grp, &iota0);
    let displayed = {
        let s = Cyclotomic::from_int(6)
            .mul(&Cyclotomic::sqrt2())
            .inv()
            .expect("nonzero");
        let iota = iota0.scale(&s);
        iota.convolve(grp, &iota) == block.neg()
    };

    // Solve (c·iota0)² = -e: the square must be a negative rational multiple
    // of the block idempotent.
    let solved_scalar = (|| {
        let base = block.support().next()?;
        let ratio = square.coeff(*base.0).mul(&base.1.inv().ok()?);
        let t = ratio.as_rational()?;
        if !t.is_negative() {
            return None;
        }
        if square != block.scale_rational(&t) {
            return None;
        }
        sqrt_in_field(&(-t))?.inv().ok()
    })();

    Ok(ComplexStructureReport {
        iota0,
        block,
        lies_in_block,
        commutes_with_corner,
        displayed_scalar_squares: displayed,
        solved_scalar,
    })
}

/// How an ordered pair multiplies relative to plain (anti)commutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairKind {
    Commute,
    Anticommute,
    /// `x·y = sign·(y·partner)` with a partner different from `x`.
    Twisted {
        sign: i32,
        partner: String,
    },
}

#[derive(Debug, Clone)]
pub struct PairRelation {
    pub x: String,
    pub y: String,
    pub kind: PairKind,
    /// The gamma-matrix schema anticommutes everywhere; agreement means
    /// plain anticommutation here too.
    pub gamma_agrees: bool,
}

/// The relation table of the quintuple `(i, j, k, d, id)` against the
/// gamma-matrix schema `(g1, g2, g3, g0, g5)`.
#[derive(Debug, Clone)]
pub struct RelationTable {
    /// `x² = ±1` per quintuple member, in order.
    pub squares: Vec<(String, i32)>,
    /// All ordered pairs `x ≠ y` in quintuple order.
    pub pairs: Vec<PairRelation>,
}

impl RelationTable {
    /// Unordered twisted pairs, each listed once.
    pub fn twisted_pairs(&self) -> Vec<(String, String)> {
        let order = ["i", "j", "k", "d", "id"];
        let pos = |s: &str| order.iter().position(|o| *o == s).unwrap();
        let mut out: Vec<(String, String)> = self
            .pairs
            .iter()
            .filter(|p| matches!(p.kind, PairKind::Twisted { .. }))
            .map(|p| {
                if pos(&p.x) < pos(&p.y) {
                    (p.x.clone(), p.y.clone())
                } else {
                    (p.y.clone(), p.x.clone())
                }
            })
            .collect();
        out.sort_by_key(|(a, b)| (pos(a), pos(b)));
        out.dedup();
        out
    }
}

pub fn dirac_relation_table(h: &GroupContext) -> Result<RelationTable, AlgebraError> {
    let grp = &h.group;
    let quintuple = ["i", "j", "k", "d", "id"];
    let id_of = |name: &str| grp.eval_word(&h.names, name);
    let z = h.id("-1");

    let mut squares = Vec::new();
    for name in quintuple {
        let x = id_of(name)?;
        let sq = grp.mul(x, x);
        let value = if sq == 0 {
            1
        } else if sq == z {
            -1
        } else {
            return Err(AlgebraError::RelationFailure {
                x: name.into(),
                y: name.into(),
            });
        };
        squares.push((name.to_string(), value));
    }

    let mut pairs = Vec::new();
    for xn in quintuple {
        for yn in quintuple {
            if xn == yn {
                continue;
            }
            let x = id_of(xn)?;
            let y = id_of(yn)?;
            let xy = grp.mul(x, y);
            let yx = grp.mul(y, x);
            let kind = if xy == yx {
                PairKind::Commute
            } else if xy == grp.mul(z, yx) {
                PairKind::Anticommute
            } else {
                // Find the witness t in the quintuple with x·y = ±(y·t).
                let mut found = None;
                for tn in quintuple {
                    let t = id_of(tn)?;
                    let yt = grp.mul(y, t);
                    if xy == yt {
                        found = Some((1, tn));
                        break;
                    }
                    if xy == grp.mul(z, yt) {
                        found = Some((-1, tn));
                        break;
                    }
                }
                let (sign, partner) = found.ok_or_else(|| AlgebraError::RelationFailure {
                    x: xn.into(),
                    y: yn.into(),
                })?;
                PairKind::Twisted {
                    sign,
                    partner: partner.to_string(),
                }
            };
            let gamma_agrees = kind == PairKind::Anticommute;
            pairs.push(PairRelation {
                x: xn.to_string(),
                y: yn.to_string(),
                kind,
                gamma_agrees,
            });
        }
    }
    Ok(RelationTable { squares, pairs })
}

/// Real Wedderburn types of the quotient-algebra chain
/// (quotients of the order-48 group by its normal chain).
pub fn quotient_algebra_chain(
    g: &GroupContext,
    prime: u64,
) -> Result<Vec<(String, WedderburnType)>, AlgebraError> {
    let chain = octa::normal_chain(g);
    let quotient_labels = ["G", "Sym(4)", "Sym(3)", "Sym(2)", "Sym(1)"];
    let mut out = Vec::new();
    for ((_, kernel), label) in chain.iter().zip(quotient_labels) {
        let (q, _) = g.group.quotient(kernel)?;
        let table = character_table(&q, prime)?;
        out.push((label.to_string(), real_wedderburn(&q, &table)?));
    }
    Ok(out)
}

/// Real Wedderburn types of the normal subgroups' own group algebras.
pub fn normal_subgroup_algebras(prime: u64) -> Result<Vec<(String, WedderburnType)>, AlgebraError> {
    let contexts = [
        octa::trivial_group(),
        octa::sign_group(),
        octa::quaternion_group(),
        octa::binary_tetrahedral_group(),
    ];
    let mut out = Vec::new();
    for ctx in contexts {
        let table = character_table(&ctx.group, prime)?;
        out.push((ctx.label.clone(), real_wedderburn(&ctx.group, &table)?));
    }
    Ok(out)
}
