//! JSON encoding for big integers: a plain number when it fits in `i64`,
//! otherwise a decimal string.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::scalar::Scalar;

pub fn to_value<T: Scalar>(v: &T) -> Value {
    let big = v.to_big();
    match big.to_i64() {
        Some(small) => Value::from(small),
        None => Value::String(big.to_string()),
    }
}

pub fn from_value(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from)),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

pub mod list {
    use super::*;

    pub fn serialize<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        values.iter().map(to_value).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Value>::deserialize(d)?
            .iter()
            .map(|v| from_value(v).ok_or_else(|| D::Error::custom(format!("not an integer: {v}"))))
            .collect()
    }
}
