use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Neg, Sub};

/// The formal parameters a coefficient may carry. The modified frequency is
/// not a symbol; it always enters through `omega^2 + omega_c^2 / 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Hbar,
    Mass,
    Omega,
    OmegaC,
    Alpha,
    Theta,
    Eta,
}

impl Symbol {
    pub const ALL: [Symbol; 7] = [
        Symbol::Hbar,
        Symbol::Mass,
        Symbol::Omega,
        Symbol::OmegaC,
        Symbol::Alpha,
        Symbol::Theta,
        Symbol::Eta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Hbar => "hbar",
            Symbol::Mass => "m",
            Symbol::Omega => "omega",
            Symbol::OmegaC => "omega_c",
            Symbol::Alpha => "alpha",
            Symbol::Theta => "theta",
            Symbol::Eta => "eta",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Integer (possibly negative) exponents over the full symbol set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolExponents(pub [i32; 7]);

impl SymbolExponents {
    pub const ONE: SymbolExponents = SymbolExponents([0; 7]);

    pub fn single(symbol: Symbol, power: i32) -> Self {
        let mut e = Self::ONE;
        e[symbol] = power;
        e
    }

    pub fn from_pairs(pairs: &[(Symbol, i32)]) -> Self {
        let mut e = Self::ONE;
        for &(s, p) in pairs {
            e[s] += p;
        }
        e
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    pub fn without(mut self, symbol: Symbol) -> Self {
        self[symbol] = 0;
        self
    }
}

impl Index<Symbol> for SymbolExponents {
    type Output = i32;
    fn index(&self, s: Symbol) -> &i32 {
        &self.0[s.index()]
    }
}

impl IndexMut<Symbol> for SymbolExponents {
    fn index_mut(&mut self, s: Symbol) -> &mut i32 {
        &mut self.0[s.index()]
    }
}

impl Add for SymbolExponents {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (o, r) in out.0.iter_mut().zip(rhs.0) {
            *o += r;
        }
        out
    }
}

impl Sub for SymbolExponents {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for SymbolExponents {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|p| -p))
    }
}

/// `hbar^-1*theta`; exponent 1 is implicit. Empty string for the unit.
impl fmt::Display for SymbolExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in Symbol::ALL {
            let p = self[s];
            if p == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if p == 1 {
                f.write_str(s.name())?;
            } else {
                write!(f, "{}^{}", s.name(), p)?;
            }
        }
        Ok(())
    }
}

/// One of the six canonical operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalOp {
    X,
    Y,
    Z,
    Px,
    Py,
    Pz,
}

impl CanonicalOp {
    pub const ALL: [CanonicalOp; 6] = [
        CanonicalOp::X,
        CanonicalOp::Y,
        CanonicalOp::Z,
        CanonicalOp::Px,
        CanonicalOp::Py,
        CanonicalOp::Pz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CanonicalOp::X => "x",
            CanonicalOp::Y => "y",
            CanonicalOp::Z => "z",
            CanonicalOp::Px => "p_x",
            CanonicalOp::Py => "p_y",
            CanonicalOp::Pz => "p_z",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_position(self) -> bool {
        self.index() < 3
    }

    /// Cartesian component 0, 1, 2.
    pub fn component(self) -> usize {
        self.index() % 3
    }

    pub fn position(component: usize) -> Self {
        Self::ALL[component]
    }

    pub fn momentum(component: usize) -> Self {
        Self::ALL[component + 3]
    }
}

/// Exponents `(a_x, a_y, a_z, b_x, b_y, b_z)` of the normal-ordered word
/// `x^a_x y^a_y z^a_z p_x^b_x p_y^b_y p_z^b_z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpExponents(pub [u32; 6]);

impl OpExponents {
    pub const IDENTITY: OpExponents = OpExponents([0; 6]);

    pub fn single(op: CanonicalOp) -> Self {
        let mut e = Self::IDENTITY;
        e.0[op.index()] = 1;
        e
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn positions(&self) -> [u32; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn momenta(&self) -> [u32; 3] {
        [self.0[3], self.0[4], self.0[5]]
    }

    pub fn from_parts(positions: [u32; 3], momenta: [u32; 3]) -> Self {
        Self([positions[0], positions[1], positions[2], momenta[0], momenta[1], momenta[2]])
    }

    pub fn get(&self, op: CanonicalOp) -> u32 {
        self.0[op.index()]
    }

    /// The factors of the word, left to right.
    pub fn factors(&self) -> impl Iterator<Item = CanonicalOp> + '_ {
        CanonicalOp::ALL
            .into_iter()
            .flat_map(move |op| core::iter::repeat_n(op, self.get(op) as usize))
    }
}

/// Lower degree first; within a degree `x` sorts before `y`, positions
/// before momenta.
impl Ord for OpExponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for OpExponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `x^1 p_y^1`; the identity renders as `1`.
impl fmt::Display for OpExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for op in CanonicalOp::ALL {
            let p = self.get(op);
            if p == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}^{}", op.name(), p)?;
        }
        Ok(())
    }
}
