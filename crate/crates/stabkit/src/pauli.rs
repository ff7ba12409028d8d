//! Exact algebra of single-qubit Pauli elements, quarter phases, and the
//! elementary truth-table gate actions (Pauli multiplication, the six
//! Pauli-permuting single-qubit Cliffords, and CNOT).
//!
//! Pauli elements use the symplectic encoding I=(0,0), X=(1,0), Z=(0,1),
//! Y=(1,1); phases are powers of i stored mod 4.

use std::fmt;

/// One tensor factor of a stabiliser operator: I, X, Y or Z.
///
/// Encoded by its symplectic bits so that multiplication is XOR plus a
/// phase update.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliElement {
    pub x: bool,
    pub z: bool,
}

impl PauliElement {
    pub const I: Self = Self { x: false, z: false };
    pub const X: Self = Self { x: true, z: false };
    pub const Z: Self = Self { x: false, z: true };
    pub const Y: Self = Self { x: true, z: true };

    pub fn is_identity(self) -> bool {
        !self.x && !self.z
    }

    pub fn letter(self) -> char {
        match (self.x, self.z) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    /// Case-sensitive inverse of [`letter`](Self::letter).
    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'I' => Some(Self::I),
            'X' => Some(Self::X),
            'Y' => Some(Self::Y),
            'Z' => Some(Self::Z),
            _ => None,
        }
    }
}

impl fmt::Display for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A power of i: value = i^ipow with ipow taken mod 4.
///
/// Multiplication is addition mod 4. Generator phases of states are
/// restricted to the real values (+1 and -1); the imaginary values occur
/// only transiently inside row products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const PLUS_ONE: Self = Phase(0);
    pub const PLUS_I: Self = Phase(1);
    pub const MINUS_ONE: Self = Phase(2);
    pub const MINUS_I: Self = Phase(3);

    pub fn new(ipow: u8) -> Self {
        Phase(ipow & 3)
    }

    pub fn ipow(self) -> u8 {
        self.0
    }

    pub fn is_real(self) -> bool {
        self.0 & 1 == 0
    }

    pub fn negate(self) -> Self {
        Phase((self.0 + 2) & 3)
    }

    /// Real value +1.0 or -1.0; panics on imaginary phases.
    pub fn sign(self) -> f64 {
        match self.0 {
            0 => 1.0,
            2 => -1.0,
            _ => panic!("imaginary phase i^{} has no real sign", self.0),
        }
    }

    /// Serialized form: `+`, `-`, `+i`, `-i`.
    pub fn symbol(self) -> &'static str {
        match self.0 {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "+" => Some(Self::PLUS_ONE),
            "+i" => Some(Self::PLUS_I),
            "-" => Some(Self::MINUS_ONE),
            "-i" => Some(Self::MINUS_I),
            _ => None,
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) & 3)
    }
}

impl std::ops::MulAssign for Phase {
    fn mul_assign(&mut self, rhs: Phase) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Product a·b = phase · element. The element is the XOR of the symplectic
/// codes; the phase follows the multiplication table (X·Y = iZ, Y·X = -iZ,
/// and cyclically).
pub fn pauli_mul(a: PauliElement, b: PauliElement) -> (Phase, PauliElement) {
    let out = PauliElement {
        x: a.x ^ b.x,
        z: a.z ^ b.z,
    };
    // With sigma_(x,z) = i^(x*z) X^x Z^z, commuting Z^za past X^xb gives
    // i^(xa*za + xb*zb + 2*za*xb - xo*zo) where (xo,zo) is the output code.
    let ipow =
        (a.x & a.z) as i8 + (b.x & b.z) as i8 + 2 * (a.z & b.x) as i8 - (out.x & out.z) as i8;
    (Phase::new(ipow.rem_euclid(4) as u8), out)
}

/// True iff a·b = b·a, i.e. the symplectic form xa·zb + xb·za vanishes mod 2.
pub fn commutes(a: PauliElement, b: PauliElement) -> bool {
    (a.x & b.z) == (b.x & a.z)
}

/// One of the six single-qubit Cliffords that permute {X, Y, Z} under
/// conjugation, with the fixed sign choices of the truth table.
#[derive(Debug, PartialEq, Eq)]
pub struct SingleQubitOp {
    name: &'static str,
    image_x: (Phase, PauliElement),
    image_y: (Phase, PauliElement),
    image_z: (Phase, PauliElement),
    /// H/P/P† factors in the implementing unitary, leftmost factor first.
    gates: &'static [BaseGate],
}

/// Elementary gate factors used to assemble the single-qubit unitaries:
/// the Hadamard H and the phase gate P = diag(1, i).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseGate {
    H,
    P,
    PDag,
}

use BaseGate::{PDag, H, P};

const PLUS: Phase = Phase::PLUS_ONE;
const MINUS: Phase = Phase::MINUS_ONE;

impl SingleQubitOp {
    /// X Y Z (identity).
    pub const IDENTITY: Self = Self {
        name: "I",
        image_x: (PLUS, PauliElement::X),
        image_y: (PLUS, PauliElement::Y),
        image_z: (PLUS, PauliElement::Z),
        gates: &[],
    };
    /// Z X Y, implemented by P H.
    pub const PH: Self = Self {
        name: "PH",
        image_x: (PLUS, PauliElement::Z),
        image_y: (PLUS, PauliElement::X),
        image_z: (PLUS, PauliElement::Y),
        gates: &[P, H],
    };
    /// Y Z X, implemented by H P†.
    pub const HPD: Self = Self {
        name: "HPd",
        image_x: (PLUS, PauliElement::Y),
        image_y: (PLUS, PauliElement::Z),
        image_z: (PLUS, PauliElement::X),
        gates: &[H, PDag],
    };
    /// -X Z Y, implemented by P H P†.
    pub const PHPD: Self = Self {
        name: "PHPd",
        image_x: (MINUS, PauliElement::X),
        image_y: (PLUS, PauliElement::Z),
        image_z: (PLUS, PauliElement::Y),
        gates: &[P, H, PDag],
    };
    /// Y X -Z, implemented by H P P H P†.
    pub const HPPHPD: Self = Self {
        name: "HPPHPd",
        image_x: (PLUS, PauliElement::Y),
        image_y: (PLUS, PauliElement::X),
        image_z: (MINUS, PauliElement::Z),
        gates: &[H, P, P, H, PDag],
    };
    /// Z -Y X, the Hadamard.
    pub const HADAMARD: Self = Self {
        name: "H",
        image_x: (PLUS, PauliElement::Z),
        image_y: (MINUS, PauliElement::Y),
        image_z: (PLUS, PauliElement::X),
        gates: &[H],
    };

    /// All six ops in truth-table row order.
    pub const TABLE: [&'static SingleQubitOp; 6] = [
        &Self::IDENTITY,
        &Self::PH,
        &Self::HPD,
        &Self::PHPD,
        &Self::HPPHPD,
        &Self::HADAMARD,
    ];

    /// The six ops ordered by gate count, ties broken by table row order.
    /// Used to pick the cheapest op realizing a required permutation.
    const BY_COST: [&'static SingleQubitOp; 6] = [
        &Self::IDENTITY,
        &Self::HADAMARD,
        &Self::PH,
        &Self::HPD,
        &Self::PHPD,
        &Self::HPPHPD,
    ];

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn gates(&self) -> &'static [BaseGate] {
        self.gates
    }

    pub fn image_of(&self, p: PauliElement) -> (Phase, PauliElement) {
        match p {
            PauliElement::I => (Phase::PLUS_ONE, PauliElement::I),
            PauliElement::X => self.image_x,
            PauliElement::Y => self.image_y,
            PauliElement::Z => self.image_z,
        }
    }

    pub fn by_name(name: &str) -> Option<&'static SingleQubitOp> {
        Self::TABLE.iter().copied().find(|op| op.name == name)
    }

    /// Cheapest op sending `from` to `to` (up to sign). `from` and `to`
    /// must be non-identity.
    pub fn taking(from: PauliElement, to: PauliElement) -> &'static SingleQubitOp {
        assert!(!from.is_identity() && !to.is_identity());
        Self::BY_COST
            .iter()
            .copied()
            .find(|op| op.image_of(from).1 == to)
            .expect("every single-element mapping is realized by two table rows")
    }

    /// The unique op sending the ordered pair `from` to `to` (up to signs).
    /// All four elements must be non-identity and each pair distinct.
    pub fn taking_pair(
        from: (PauliElement, PauliElement),
        to: (PauliElement, PauliElement),
    ) -> &'static SingleQubitOp {
        assert!(from.0 != from.1 && to.0 != to.1);
        Self::BY_COST
            .iter()
            .copied()
            .find(|op| op.image_of(from.0).1 == to.0 && op.image_of(from.1).1 == to.1)
            .expect("a permutation is fixed by the images of two distinct elements")
    }
}

/// Conjugation action of the selected op: U a U† = phase · element.
pub fn apply_single_qubit(op: &SingleQubitOp, a: PauliElement) -> (Phase, PauliElement) {
    op.image_of(a)
}

/// Conjugation action of CNOT on a (control, target) pair of elements:
/// returns (phase, control', target'). The control column is modified too
/// whenever the target carries a Z component.
pub fn apply_cnot(c: PauliElement, t: PauliElement) -> (Phase, PauliElement, PauliElement) {
    let c_out = PauliElement {
        x: c.x,
        z: c.z ^ t.z,
    };
    let t_out = PauliElement {
        x: t.x ^ c.x,
        z: t.z,
    };
    // The sign flips exactly for the (X,Z) -> (-Y,Y) and (Y,Y) -> (-X,Z) rows.
    let minus = c.x && t.z && (t.x == c.z);
    (
        if minus {
            Phase::MINUS_ONE
        } else {
            Phase::PLUS_ONE
        },
        c_out,
        t_out,
    )
}
