use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Basis-name families used by the constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabelKind {
    /// The generator of `F_0`.
    E1,
    Ex,
    Ey,
    F,
    Cx,
    Cy,
    D,
    Hx,
    Hy,
    K,
    /// Plain numbered basis `e_j` of a degenerate construction.
    E,
}

impl LabelKind {
    const ALL: [LabelKind; 11] = [
        LabelKind::E1,
        LabelKind::Ex,
        LabelKind::Ey,
        LabelKind::F,
        LabelKind::Cx,
        LabelKind::Cy,
        LabelKind::D,
        LabelKind::Hx,
        LabelKind::Hy,
        LabelKind::K,
        LabelKind::E,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LabelKind::E1 => "e1",
            LabelKind::Ex => "ex",
            LabelKind::Ey => "ey",
            LabelKind::F => "f",
            LabelKind::Cx => "cx",
            LabelKind::Cy => "cy",
            LabelKind::D => "d",
            LabelKind::Hx => "hx",
            LabelKind::Hy => "hy",
            LabelKind::K => "k",
            LabelKind::E => "e",
        }
    }
}

/// Where a template copy was instantiated: block `block` of stage `stage`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Instance {
    pub stage: u32,
    pub block: u32,
}

/// Provenance-carrying generator name, e.g. `f[3]`, `k[2,1]` or
/// `cx[1]@6.4` (generator `c^x_1` of the block-4 template copy in `F_6`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorLabel {
    pub kind: LabelKind,
    /// 1-based indices, as in the conventional basis names.
    pub indices: Vec<u32>,
    pub instance: Option<Instance>,
}

impl GeneratorLabel {
    pub fn new(kind: LabelKind, indices: &[u32]) -> Self {
        GeneratorLabel {
            kind,
            indices: indices.to_vec(),
            instance: None,
        }
    }

    pub fn plain(kind: LabelKind) -> Self {
        Self::new(kind, &[])
    }

    pub fn instantiated(&self, stage: u32, block: u32) -> Self {
        GeneratorLabel {
            instance: Some(Instance { stage, block }),
            ..self.clone()
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.as_str())?;
        if !self.indices.is_empty() {
            f.write_str("[")?;
            for (n, i) in self.indices.iter().enumerate() {
                if n > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str("]")?;
        }
        if let Some(inst) = self.instance {
            write!(f, "@{}.{}", inst.stage, inst.block)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid generator label `{0}`")]
pub struct LabelParseError(pub String);

impl FromStr for GeneratorLabel {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LabelParseError(s.to_string());
        let (head, instance) = match s.split_once('@') {
            Some((head, inst)) => {
                let (stage, block) = inst.split_once('.').ok_or_else(err)?;
                let instance = Instance {
                    stage: stage.parse().map_err(|_| err())?,
                    block: block.parse().map_err(|_| err())?,
                };
                (head, Some(instance))
            }
            None => (s, None),
        };
        let (name, indices) = match head.split_once('[') {
            Some((name, rest)) => {
                let inner = rest.strip_suffix(']').ok_or_else(err)?;
                let indices = inner
                    .split(',')
                    .map(|t| t.parse::<u32>().map_err(|_| err()))
                    .collect::<Result<Vec<_>, _>>()?;
                (name, indices)
            }
            None => (head, Vec::new()),
        };
        let kind = LabelKind::ALL
            .into_iter()
            .find(|k| k.as_str() == name)
            .ok_or_else(err)?;
        Ok(GeneratorLabel {
            kind,
            indices,
            instance,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn display_and_parse() {
        let l = GeneratorLabel::new(LabelKind::K, &[2, 1]);
        assert_eq!(format!("{l}"), "k[2,1]");
        let l = GeneratorLabel::new(LabelKind::Cx, &[1]).instantiated(6, 4);
        assert_eq!(format!("{l}"), "cx[1]@6.4");
        for text in ["e1", "ex", "f[3]", "k[2,1]", "cx[1]@6.4", "e[5]"] {
            let parsed: GeneratorLabel = text.parse().unwrap();
            assert_eq!(format!("{parsed}"), text);
        }
        assert!("q[1]".parse::<GeneratorLabel>().is_err());
        assert!("f[1".parse::<GeneratorLabel>().is_err());
        assert!("f@3".parse::<GeneratorLabel>().is_err());
    }
}
