//! Explicit matrix representations: the irreducibles from their generator
//! images, the quaternionic realisations on the 4-space with basis
//! `{1, i, j, k}`, the real 4-dimensional spinor built from the complex
//! 2-dimensional one by a scalar twist plus conjugation, reflection
//! eigenframes, charge triples, and matrix-group closures (hypercube
//! symmetries).
//!
//! Quaternionic actions are written `q -> left·q·right` and realised as 4x4
//! matrices acting on row vectors, so that the matrix of a product of group
//! elements is the product of their matrices in the same order.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::chartab::Character;
use crate::exact::{rat, rat_int, Cyclotomic, ExactMatrix, Rational};
use crate::group::{FiniteGroup, GroupError};
use crate::octa::GroupContext;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("unknown representation label `{0}`")]
    UnknownLabel(String),
    #[error("given generators do not generate the group (reached {reached} of {order})")]
    NotGenerating { reached: usize, order: usize },
    #[error("homomorphism violated at pair ({x}, {y})")]
    Homomorphism { x: String, y: String },
    #[error("character of `{label}` is not constant on class of {element}")]
    NotClassFunction { label: String, element: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A verified matrix representation: one image per element id.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub label: String,
    pub images: Vec<ExactMatrix>,
}

impl MatrixRep {
    /// Extends generator images to the whole group along words, then checks
    /// the homomorphism property exhaustively against the Cayley table.
    pub fn from_generator_images(
        group: &FiniteGroup,
        label: &str,
        gens: &[(u32, ExactMatrix)],
    ) -> Result<MatrixRep, RepError> {
        let n = group.order();
        let dim = gens
            .first()
            .map(|(_, m)| m.rows())
            .expect("at least one generator image");
        let mut images: Vec<Option<ExactMatrix>> = vec![None; n];
        images[0] = Some(ExactMatrix::identity(dim));
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for (g, m) in gens {
                let y = group.mul(x, *g);
                if images[y as usize].is_none() {
                    let img = images[x as usize].as_ref().unwrap().mul(m);
                    images[y as usize] = Some(img);
                    queue.push_back(y);
                }
            }
        }
        let reached = images.iter().filter(|i| i.is_some()).count();
        if reached != n {
            return Err(RepError::NotGenerating { reached, order: n });
        }
        let images: Vec<ExactMatrix> = images.into_iter().map(Option::unwrap).collect();
        let rep = MatrixRep {
            label: label.to_string(),
            images,
        };
        rep.verify_homomorphism(group)?;
        Ok(rep)
    }

    /// Exhaustive check `image(x)·image(y) = image(xy)` over all pairs.
    pub fn verify_homomorphism(&self, group: &FiniteGroup) -> Result<(), RepError> {
        for x in 0..group.order() as u32 {
            for y in 0..group.order() as u32 {
                let prod = self.images[x as usize].mul(&self.images[y as usize]);
                if prod != self.images[group.mul(x, y) as usize] {
                    return Err(RepError::Homomorphism {
                        x: group.display(x).to_string(),
                        y: group.display(y).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.images[0].rows()
    }

    /// Extracted character, with class-constancy verified.
    pub fn character(&self, group: &FiniteGroup) -> Result<Character, RepError> {
        let mut values = Vec::with_capacity(group.classes().len());
        for class in group.classes() {
            let value = self.images[class.rep as usize].trace();
            for &m in &class.members {
                if self.images[m as usize].trace() != value {
                    return Err(RepError::NotClassFunction {
                        label: self.label.clone(),
                        element: group.display(m).to_string(),
                    });
                }
            }
            values.push(value);
        }
        Ok(Character {
            label: self.label.clone(),
            values,
        })
    }

    /// True when every image satisfies `Mᴴ·M = I`.
    pub fn is_unitary(&self) -> bool {
        let id = ExactMatrix::identity(self.dimension());
        self.images.iter().all(|m| m.conj_transpose().mul(m) == id)
    }

    /// Distinct determinant values over all images, canonically serialized.
    pub fn determinant_values(&self) -> BTreeSet<String> {
        self.images
            .iter()
            .map(|m| m.det().to_canonical_string())
            .collect()
    }
}

fn c(s: &str) -> Cyclotomic {
    Cyclotomic::parse_pretty(s).expect("constant scalar literal")
}

fn mat(rows: &[&[&str]]) -> ExactMatrix {
    ExactMatrix::parse_rows(rows).expect("constant matrix literal")
}

/// Generator images (for `w` and `jd`) of the conventional irreducibles.
fn irrep_generator_images(label: &str) -> Option<(ExactMatrix, ExactMatrix)> {
    let w2 = mat(&[
        &["-1/2 + 1/2*i", "1/2 + 1/2*i"],
        &["-1/2 + 1/2*i", "-1/2 - 1/2*i"],
    ]);
    let jd2 =
        mat(&[&["1", "1"], &["-1", "1"]]).scale(&c("i").mul(&Cyclotomic::sqrt2().inv().unwrap()));
    let w3 = mat(&[&["0", "1", "0"], &["0", "0", "1"], &["1", "0", "0"]]);
    // Orientation of the off-diagonal block is forced by the defining
    // relations against this w image; the exhaustive homomorphism check
    // rejects the opposite choice.
    let jd3 = mat(&[&["-1", "0", "0"], &["0", "0", "1"], &["0", "-1", "0"]]);
    let pair = match label {
        "1+" => (mat(&[&["1"]]), mat(&[&["1"]])),
        "1-" => (mat(&[&["1"]]), mat(&[&["-1"]])),
        "2_0" => (
            mat(&[&["-1/2", "1/2*sqrt3"], &["-1/2*sqrt3", "-1/2"]]),
            mat(&[&["1", "0"], &["0", "-1"]]),
        ),
        "2+" => (w2, jd2),
        "2-" => (w2, jd2.neg()),
        "3+" => (w3, jd3),
        "3-" => (w3, jd3.neg()),
        "4_0" => (
            mat(&[
                &[
                    "1/4 - 1/4*sqrt3",
                    "-1/4 - 1/4*sqrt3",
                    "-1/4 - 1/4*sqrt3",
                    "-1/4 + 1/4*sqrt3",
                ],
                &[
                    "1/4 + 1/4*sqrt3",
                    "1/4 - 1/4*sqrt3",
                    "1/4 - 1/4*sqrt3",
                    "-1/4 - 1/4*sqrt3",
                ],
                &[
                    "1/4 - 1/4*sqrt3",
                    "-1/4 - 1/4*sqrt3",
                    "1/4 + 1/4*sqrt3",
                    "1/4 - 1/4*sqrt3",
                ],
                &[
                    "1/4 + 1/4*sqrt3",
                    "1/4 - 1/4*sqrt3",
                    "-1/4 + 1/4*sqrt3",
                    "1/4 + 1/4*sqrt3",
                ],
            ]),
            // The minus signs must sit in the upper block: with the lower
            // placement this matrix squares to the identity and the pair
            // collapses onto a non-faithful degree-4 sum.
            mat(&[
                &["0", "1", "0", "-1"],
                &["1", "0", "-1", "0"],
                &["0", "1", "0", "1"],
                &["1", "0", "1", "0"],
            ])
            .scale(&Cyclotomic::sqrt2().inv().unwrap()),
        ),
        _ => return None,
    };
    Some(pair)
}

/// Builds one of the conventional irreducibles (`1±`, `2_0`, `2±`, `3±`,
/// `4_0`) from its generator images and verifies it exhaustively.
pub fn build_irrep(g: &GroupContext, label: &str) -> Result<MatrixRep, RepError> {
    let (w_img, jd_img) =
        irrep_generator_images(label).ok_or_else(|| RepError::UnknownLabel(label.into()))?;
    MatrixRep::from_generator_images(&g.group, label, &[(g.id("w"), w_img), (g.id("jd"), jd_img)])
}

// ---------------------------------------------------------------------------
// Quaternions over the coefficient field.
// ---------------------------------------------------------------------------

/// A quaternion with exact cyclotomic coefficients in basis `{1, i, j, k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quat {
    pub coords: [Cyclotomic; 4],
}

impl Quat {
    pub fn new(r: Cyclotomic, i: Cyclotomic, j: Cyclotomic, k: Cyclotomic) -> Self {
        Quat {
            coords: [r, i, j, k],
        }
    }

    pub fn basis(idx: usize) -> Self {
        let mut coords = [
            Cyclotomic::zero(),
            Cyclotomic::zero(),
            Cyclotomic::zero(),
            Cyclotomic::zero(),
        ];
        coords[idx] = Cyclotomic::one();
        Quat { coords }
    }

    pub fn one() -> Self {
        Quat::basis(0)
    }

    pub fn i() -> Self {
        Quat::basis(1)
    }

    pub fn j() -> Self {
        Quat::basis(2)
    }

    pub fn k() -> Self {
        Quat::basis(3)
    }

    /// `(-1 + i + j + k)/2`.
    pub fn w() -> Self {
        let h = rat(1, 2);
        Quat::new(
            Cyclotomic::from_int(-1).scale(&h),
            Cyclotomic::one().scale(&h),
            Cyclotomic::one().scale(&h),
            Cyclotomic::one().scale(&h),
        )
    }

    /// `(j - k)/sqrt2`.
    pub fn c() -> Self {
        let s = Cyclotomic::sqrt2().inv().unwrap();
        Quat::new(Cyclotomic::zero(), Cyclotomic::zero(), s.clone(), -&s)
    }

    pub fn neg(&self) -> Quat {
        Quat {
            coords: [
                -&self.coords[0],
                -&self.coords[1],
                -&self.coords[2],
                -&self.coords[3],
            ],
        }
    }

    /// Quaternion conjugate (negates the imaginary part); for the unit
    /// quaternions used here this is the inverse.
    pub fn quat_conj(&self) -> Quat {
        Quat {
            coords: [
                self.coords[0].clone(),
                -&self.coords[1],
                -&self.coords[2],
                -&self.coords[3],
            ],
        }
    }

    pub fn mul(&self, other: &Quat) -> Quat {
        let [a0, a1, a2, a3] = &self.coords;
        let [b0, b1, b2, b3] = &other.coords;
        let r = &(&a0.mul(b0) - &a1.mul(b1)) - &(&a2.mul(b2) + &a3.mul(b3));
        let i = &(&a0.mul(b1) + &a1.mul(b0)) + &(&a2.mul(b3) - &a3.mul(b2));
        let j = &(&a0.mul(b2) - &a1.mul(b3)) + &(&a2.mul(b0) + &a3.mul(b1));
        let k = &(&a0.mul(b3) + &a1.mul(b2)) + &(&a3.mul(b0) - &a2.mul(b1));
        Quat::new(r, i, j, k)
    }
}

/// One generator's action `q -> left·q·right`.
#[derive(Debug, Clone)]
pub struct QuatAction {
    pub left: Quat,
    pub right: Quat,
}

impl QuatAction {
    fn apply(&self, q: &Quat) -> Quat {
        self.left.mul(q).mul(&self.right)
    }

    /// Row-action matrix: row `r` holds the image of basis element `r`.
    fn realize(&self) -> ExactMatrix {
        ExactMatrix::from_fn(4, 4, |r, col| {
            self.apply(&Quat::basis(r)).coords[col].clone()
        })
    }
}

/// A quaternionic realisation: the per-generator actions plus the realized,
/// exhaustively verified matrix representation.
#[derive(Debug, Clone)]
pub struct QuaternionAction {
    pub label: String,
    pub actions: Vec<(String, QuatAction)>,
    pub rep: MatrixRep,
}

fn realize_actions(
    g: &GroupContext,
    label: &str,
    gens: [(&str, QuatAction); 4],
) -> Result<QuaternionAction, RepError> {
    let images: Vec<(u32, ExactMatrix)> = gens
        .iter()
        .map(|(name, act)| (g.id(name), act.realize()))
        .collect();
    let rep = MatrixRep::from_generator_images(&g.group, label, &images)?;
    Ok(QuaternionAction {
        label: label.to_string(),
        actions: gens
            .into_iter()
            .map(|(name, act)| (name.to_string(), act))
            .collect(),
        rep,
    })
}

/// The conventional quaternionic realisations, keyed by the character they
/// carry: `1+1-2_0`, `1+3-`, `1-3+`, `4_0`, `2+2-`.
pub fn realize_quaternionic(g: &GroupContext, row: &str) -> Result<QuaternionAction, RepError> {
    let one = Quat::one();
    let qi = Quat::i();
    let qj = Quat::j();
    let qw = Quat::w();
    let qc = Quat::c();
    let conj_by = |x: &Quat| QuatAction {
        left: x.quat_conj(),
        right: x.clone(),
    };
    let right_by = |x: &Quat| QuatAction {
        left: one.clone(),
        right: x.clone(),
    };
    let gens = match row {
        "1+1-2_0" => [
            ("i", right_by(&one)),
            ("j", right_by(&one)),
            ("w", conj_by(&qw)),
            ("d", conj_by(&qc)),
        ],
        "1+3-" => [
            ("i", conj_by(&qi)),
            ("j", conj_by(&qj)),
            ("w", conj_by(&qw)),
            ("d", conj_by(&qc)),
        ],
        "1-3+" => [
            ("i", conj_by(&qi)),
            ("j", conj_by(&qj)),
            ("w", conj_by(&qw)),
            (
                "d",
                QuatAction {
                    left: qc.clone(),
                    right: qc.clone(),
                },
            ),
        ],
        "4_0" => [
            ("i", right_by(&qi)),
            ("j", right_by(&qj)),
            ("w", conj_by(&qw)),
            ("d", conj_by(&qc)),
        ],
        "2+2-" => [
            ("i", right_by(&qi)),
            ("j", right_by(&qj)),
            ("w", right_by(&qw)),
            (
                "d",
                QuatAction {
                    left: Quat::k(),
                    right: qc.clone(),
                },
            ),
        ],
        _ => return Err(RepError::UnknownLabel(row.into())),
    };
    realize_actions(g, row, gens)
}

/// The real 4-dimensional form of the complex 2-dimensional spinor in which
/// `w` acts by right multiplication and `d` by conjugation; it carries the
/// invariant complex structures given by multiplication by `±(j-k)/sqrt2`.
pub fn spinor_spacetime_realization(g: &GroupContext) -> Result<QuaternionAction, RepError> {
    let one = Quat::one();
    let qc = Quat::c();
    let gens = [
        (
            "i",
            QuatAction {
                left: one.clone(),
                right: Quat::i(),
            },
        ),
        (
            "j",
            QuatAction {
                left: one.clone(),
                right: Quat::j(),
            },
        ),
        (
            "w",
            QuatAction {
                left: one.clone(),
                right: Quat::w(),
            },
        ),
        (
            "d",
            QuatAction {
                left: qc.quat_conj(),
                right: qc,
            },
        ),
    ];
    realize_actions(g, "2+2- (w right)", gens)
}

/// Multiplication by `s·(j-k)/sqrt2` (s = ±1) on the quaternion 4-space:
/// the candidate complex structure on the realisation above.
pub fn complex_structure_operator(sign: i64) -> ExactMatrix {
    let factor = Quat::c();
    ExactMatrix::from_fn(4, 4, |r, col| {
        factor.mul(&Quat::basis(r)).coords[col].scale(&rat_int(sign))
    })
}

/// Construction of the real 4-dimensional spinor from the complex
/// 2-dimensional one: multiply the `w` image by the scalar
/// `(-1 ± i·sqrt3)/2`, compose the `d` image with complex conjugation, and
/// realify. Coordinates are `(Re v1, Im v1, Re v2, Im v2)`.
pub fn build_4_0_from_2pm(g: &GroupContext, plus: bool) -> Result<MatrixRep, RepError> {
    let scalar = if plus {
        Cyclotomic::omega()
    } else {
        Cyclotomic::omega().conj()
    };
    let w2 = mat(&[
        &["-1/2 + 1/2*i", "1/2 + 1/2*i"],
        &["-1/2 + 1/2*i", "-1/2 - 1/2*i"],
    ])
    .scale(&scalar);
    let i2 = mat(&[&["0", "1"], &["-1", "0"]]);
    // The antilinear image of d must anticommute with the image of i and
    // intertwine conj(W) with W²; the unique solution up to sign is the
    // image of i·d, namely (1/sqrt2)·[[1,1],[1,-1]].
    let id2 = mat(&[&["1", "1"], &["1", "-1"]]).scale(&Cyclotomic::sqrt2().inv().unwrap());

    let realify = |m: &ExactMatrix| {
        ExactMatrix::from_fn(4, 4, |r, col| {
            let entry = m.at(r / 2, col / 2);
            match (r % 2, col % 2) {
                (0, 0) | (1, 1) => entry.real_part(),
                (1, 0) => entry.imag_part(),
                (0, 1) => -&entry.imag_part(),
                _ => unreachable!(),
            }
        })
    };
    let conj4 = ExactMatrix::from_fn(4, 4, |r, col| {
        if r == col {
            if r % 2 == 0 {
                Cyclotomic::one()
            } else {
                Cyclotomic::from_int(-1)
            }
        } else {
            Cyclotomic::zero()
        }
    });

    let label = if plus {
        "4_0 (from 2+)"
    } else {
        "4_0 (from 2-)"
    };
    MatrixRep::from_generator_images(
        &g.group,
        label,
        &[
            (g.id("i"), realify(&i2)),
            (g.id("w"), realify(&w2)),
            (g.id("d"), realify(&id2).mul(&conj4)),
        ],
    )
}

/// One reflection among the images of a 2-dimensional representation, with
/// its `+1` and `-1` eigenlines.
#[derive(Debug, Clone)]
pub struct ReflectionLines {
    pub matrix: ExactMatrix,
    pub plus_line: Vec<Cyclotomic>,
    pub minus_line: Vec<Cyclotomic>,
}

/// The three reflections among the images of a `2_0` representation and
/// their eigenlines.
pub fn reflection_eigenframe(rep: &MatrixRep) -> Vec<ReflectionLines> {
    let mut distinct: Vec<ExactMatrix> = Vec::new();
    for m in &rep.images {
        if !distinct.contains(m) {
            distinct.push(m.clone());
        }
    }
    let minus_one = Cyclotomic::from_int(-1);
    let mut out = Vec::new();
    for m in distinct {
        if m.det() != minus_one {
            continue;
        }
        let plus = m.eigenspace(&Cyclotomic::one());
        let minus = m.eigenspace(&minus_one);
        assert_eq!(plus.len(), 1, "a reflection fixes a single line");
        assert_eq!(minus.len(), 1);
        out.push(ReflectionLines {
            matrix: m,
            plus_line: plus.into_iter().next().unwrap(),
            minus_line: minus.into_iter().next().unwrap(),
        });
    }
    out
}

/// True when two 2-vectors span the same line.
pub fn same_line(a: &[Cyclotomic], b: &[Cyclotomic]) -> bool {
    a.len() == 2
        && b.len() == 2
        && a[0].mul(&b[1]) == a[1].mul(&b[0])
        && !(a[0].is_zero() && a[1].is_zero())
        && !(b[0].is_zero() && b[1].is_zero())
}

/// Set-based projective comparison of line families.
pub fn lines_match(got: &[Vec<Cyclotomic>], expected: &[Vec<Cyclotomic>]) -> bool {
    if got.len() != expected.len() {
        return false;
    }
    let mut used = vec![false; expected.len()];
    for line in got {
        let mut found = None;
        for (idx, e) in expected.iter().enumerate() {
            if !used[idx] && same_line(line, e) {
                found = Some(idx);
                break;
            }
        }
        match found {
            Some(idx) => used[idx] = true,
            None => return false,
        }
    }
    true
}

/// The two quantised direction triples of the 2-dimensional representation,
/// rendered as complex numbers `2/sqrt3 · {1, w, w²}` and
/// `2/3 · {i, iw, iw²}`; returns their imaginary parts (charge triples).
pub fn charge_assignment() -> ([Rational; 3], [Rational; 3]) {
    let omega = Cyclotomic::omega();
    let scale1 = Cyclotomic::from_int(2).mul(&Cyclotomic::sqrt3().inv().unwrap());
    let scale2 = Cyclotomic::from_rational(rat(2, 3)).mul(&Cyclotomic::i());
    let im = |x: &Cyclotomic| {
        x.imag_part()
            .as_rational()
            .expect("imaginary part of these directions is rational")
    };
    let first = std::array::from_fn(|t| im(&scale1.mul(&omega.pow(t as u64))));
    let second = std::array::from_fn(|t| im(&scale2.mul(&omega.pow(t as u64))));
    (first, second)
}

/// Closure order of a set of invertible matrices, with a flag telling
/// whether every element is a signed permutation matrix.
pub fn matrix_group_closure(
    generators: &[ExactMatrix],
    cap: usize,
) -> Result<(usize, bool), GroupError> {
    if generators.is_empty() {
        return Err(GroupError::Empty);
    }
    let n = generators[0].rows();
    for (index, m) in generators.iter().enumerate() {
        if !m.is_square() || m.rows() != n {
            return Err(GroupError::ShapeMismatch);
        }
        if m.det().is_zero() {
            return Err(GroupError::NotInvertible { index });
        }
    }
    let identity = ExactMatrix::identity(n);
    let mut seen: BTreeSet<String> = BTreeSet::from([identity.content_key()]);
    let mut elements = vec![identity];
    let mut all_signed = elements[0].is_signed_permutation();
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for gen in generators {
            let prod = elements[x].mul(gen);
            let key = prod.content_key();
            if seen.insert(key) {
                if elements.len() + 1 > cap {
                    return Err(GroupError::ClosureBudgetExceeded { cap });
                }
                all_signed = all_signed && prod.is_signed_permutation();
                elements.push(prod);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    Ok((elements.len(), all_signed))
}

/// Row-action matrix of left multiplication by a quaternion on `{1,i,j,k}`.
pub fn left_multiplication_matrix(q: &Quat) -> ExactMatrix {
    ExactMatrix::from_fn(4, 4, |r, col| q.mul(&Quat::basis(r)).coords[col].clone())
}

/// The integer matrices representing `w` and `jd` on the quantised 4-space
/// (the hypercube generators).
pub fn hypercube_generators() -> (ExactMatrix, ExactMatrix) {
    (
        mat(&[
            &["1", "0", "0", "0"],
            &["0", "0", "1", "0"],
            &["0", "0", "0", "1"],
            &["0", "1", "0", "0"],
        ]),
        mat(&[
            &["0", "0", "0", "-1"],
            &["0", "0", "-1", "0"],
            &["-1", "0", "0", "0"],
            &["0", "1", "0", "0"],
        ]),
    )
}
