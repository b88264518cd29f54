//! Binary instance container.
//!
//! Layout, all little-endian: magic `DPDP`, `u32` version, `u8` payload kind,
//! `u64` element count, then the payload. Coordinates are `f64`, byte
//! sequences are raw, match lists are `(u64, u64)` pairs.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{DpError, Result};

pub const MAGIC: &[u8; 4] = b"DPDP";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    /// Ascending point coordinates of a GLWS instance.
    Coordinates(Vec<f64>),
    /// A symbol sequence.
    Bytes(Vec<u8>),
    /// 1-based `(i, j)` match pairs.
    Matches(Vec<(u64, u64)>),
}

impl Payload {
    pub fn kind(&self) -> u8 {
        match self {
            Payload::Coordinates(_) => 1,
            Payload::Bytes(_) => 2,
            Payload::Matches(_) => 3,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Payload::Coordinates(_) => "coordinates",
            Payload::Bytes(_) => "bytes",
            Payload::Matches(_) => "matches",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Payload::Coordinates(v) => v.len(),
            Payload::Bytes(v) => v.len(),
            Payload::Matches(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceFile {
    pub payload: Payload,
}

impl InstanceFile {
    pub fn new(payload: Payload) -> Result<Self> {
        if let Payload::Coordinates(v) = &payload {
            validate_coordinates(v)?;
        }
        Ok(InstanceFile { payload })
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(MAGIC)?;
        w.write_all(&VERSION.to_le_bytes())?;
        w.write_all(&[self.payload.kind()])?;
        w.write_all(&(self.payload.len() as u64).to_le_bytes())?;
        match &self.payload {
            Payload::Coordinates(v) => {
                for x in v {
                    w.write_all(&x.to_le_bytes())?;
                }
            }
            Payload::Bytes(v) => w.write_all(v)?,
            Payload::Matches(v) => {
                for (i, j) in v {
                    w.write_all(&i.to_le_bytes())?;
                    w.write_all(&j.to_le_bytes())?;
                }
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_from<R: Read>(mut r: R) -> Result<Self> {
        let mut magic = [0u8; 4];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(DpError::Format(format!("bad magic {magic:?}")));
        }
        let version = u32::from_le_bytes(read_array(&mut r)?);
        if version != VERSION {
            return Err(DpError::Format(format!("unsupported version {version}")));
        }
        let [kind] = read_array::<1>(&mut r)?;
        let count = u64::from_le_bytes(read_array(&mut r)?);
        let count = usize::try_from(count)
            .map_err(|_| DpError::Format(format!("count {count} too large")))?;
        let payload = match kind {
            1 => {
                let mut v = Vec::with_capacity(count.min(1 << 24));
                for _ in 0..count {
                    v.push(f64::from_le_bytes(read_array(&mut r)?));
                }
                Payload::Coordinates(v)
            }
            2 => {
                let mut v = Vec::with_capacity(count.min(1 << 28));
                (&mut r).take(count as u64).read_to_end(&mut v)?;
                if v.len() != count {
                    return Err(DpError::Format(format!(
                        "expected {count} bytes, found {}",
                        v.len()
                    )));
                }
                Payload::Bytes(v)
            }
            3 => {
                let mut v = Vec::with_capacity(count.min(1 << 24));
                for _ in 0..count {
                    let i = u64::from_le_bytes(read_array(&mut r)?);
                    let j = u64::from_le_bytes(read_array(&mut r)?);
                    v.push((i, j));
                }
                Payload::Matches(v)
            }
            k => return Err(DpError::Format(format!("unknown payload kind {k}"))),
        };
        let mut rest = [0u8; 1];
        if r.read(&mut rest)? != 0 {
            return Err(DpError::Format("trailing bytes after payload".into()));
        }
        InstanceFile::new(payload).map_err(|e| DpError::Format(e.to_string()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        self.write_to(BufWriter::new(File::create(path)?))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::read_from(BufReader::new(File::open(path)?))
    }

    /// Integral coordinates as GLWS positions.
    pub fn positions(&self) -> Result<Vec<i64>> {
        match &self.payload {
            Payload::Coordinates(v) => v
                .iter()
                .map(|&x| {
                    if x.fract() == 0.0 && x.abs() < (1u64 << 53) as f64 {
                        Ok(x as i64)
                    } else {
                        Err(DpError::invalid(format!(
                            "coordinate {x} is not an exact integer"
                        )))
                    }
                })
                .collect(),
            other => Err(wrong_kind("coordinates", other)),
        }
    }

    pub fn bytes(&self) -> Result<&[u8]> {
        match &self.payload {
            Payload::Bytes(v) => Ok(v),
            other => Err(wrong_kind("bytes", other)),
        }
    }

    pub fn matches(&self) -> Result<Vec<(usize, usize)>> {
        match &self.payload {
            Payload::Matches(v) => v
                .iter()
                .map(|&(i, j)| match (usize::try_from(i), usize::try_from(j)) {
                    (Ok(i), Ok(j)) => Ok((i, j)),
                    _ => Err(DpError::invalid(format!("pair ({i}, {j}) does not fit"))),
                })
                .collect(),
            other => Err(wrong_kind("matches", other)),
        }
    }
}

fn wrong_kind(want: &str, got: &Payload) -> DpError {
    DpError::invalid(format!(
        "expected a {want} instance, found {}",
        got.kind_name()
    ))
}

fn validate_coordinates(v: &[f64]) -> Result<()> {
    if let Some(x) = v.iter().find(|x| !x.is_finite()) {
        return Err(DpError::invalid(format!("coordinate {x} is not finite")));
    }
    if let Some(w) = v.windows(2).find(|w| w[0] > w[1]) {
        return Err(DpError::invalid(format!(
            "coordinates {} and {} are not ascending",
            w[0], w[1]
        )));
    }
    Ok(())
}

fn read_array<const N: usize>(r: &mut impl Read) -> Result<[u8; N]> {
    let mut buf = [0u8; N];
    r.read_exact(&mut buf)
        .map_err(|e| DpError::Format(format!("truncated file: {e}")))?;
    Ok(buf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(p: Payload) {
        let f = InstanceFile::new(p).unwrap();
        let mut buf = Vec::new();
        f.write_to(&mut buf).unwrap();
        let g = InstanceFile::read_from(&buf[..]).unwrap();
        assert_eq!(f, g);
        let mut again = Vec::new();
        g.write_to(&mut again).unwrap();
        assert_eq!(buf, again);
    }

    #[test]
    fn roundtrips() {
        roundtrip(Payload::Coordinates(vec![1.0, 2.0, 10.0]));
        roundtrip(Payload::Bytes(b"abcb".to_vec()));
        roundtrip(Payload::Matches(vec![(1, 3), (2, 1)]));
        roundtrip(Payload::Bytes(vec![]));
    }

    #[test]
    fn header_layout() {
        let f = InstanceFile::new(Payload::Bytes(b"xy".to_vec())).unwrap();
        let mut buf = Vec::new();
        f.write_to(&mut buf).unwrap();
        assert_eq!(&buf[..4], b"DPDP");
        assert_eq!(&buf[4..8], &[1, 0, 0, 0]);
        assert_eq!(buf[8], 2);
        assert_eq!(&buf[9..17], &[2, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(&buf[17..], b"xy");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(InstanceFile::new(Payload::Coordinates(vec![2.0, 1.0])).is_err());
        assert!(InstanceFile::read_from(&b"NOPE"[..]).is_err());
        let f = InstanceFile::new(Payload::Bytes(b"xyz".to_vec())).unwrap();
        let mut buf = Vec::new();
        f.write_to(&mut buf).unwrap();
        assert!(InstanceFile::read_from(&buf[..buf.len() - 1]).is_err());
        buf.push(0);
        assert!(InstanceFile::read_from(&buf[..]).is_err());
        buf[8] = 9;
        assert!(InstanceFile::read_from(&buf[..]).is_err());
        let c = InstanceFile::new(Payload::Coordinates(vec![0.5])).unwrap();
        assert!(c.positions().is_err());
        assert!(c.bytes().is_err());
    }
}
