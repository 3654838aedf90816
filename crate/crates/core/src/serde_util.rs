//! Serde helpers: exact rationals travel as fraction strings ("n/d").

pub(crate) mod rational_string {
    use std::str::FromStr;

    use num::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigRational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<BigRational, D::Error> {
        let s = String::deserialize(deserializer)?;
        BigRational::from_str(&s).map_err(D::Error::custom)
    }
}
