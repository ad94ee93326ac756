#pragma once

namespace nilrep {

/// Floor-style remainder in [0, m).
inline long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace nilrep
