#include "nilrep/cartan.hpp"

namespace nilrep {

char type_letter(LieType t) {
    switch (t) {
        case LieType::A: return 'A';
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
    }
    throw InternalError("bad LieType");
}

LieType type_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return LieType::A;
        case 'B': case 'b': return LieType::B;
        case 'C': case 'c': return LieType::C;
        case 'D': case 'd': return LieType::D;
    }
    throw StructuralError(std::string("unknown algebra type '") + c + "'");
}

int min_rank(LieType t) {
    switch (t) {
        case LieType::A: return 1;
        case LieType::C: return 2;
        case LieType::B: return 3;
        case LieType::D: return 4;
    }
    throw InternalError("bad LieType");
}

int CartanData::positive_roots() const {
    switch (type) {
        case LieType::A: return rank * (rank + 1) / 2;
        case LieType::B:
        case LieType::C: return rank * rank;
        case LieType::D: return rank * (rank - 1);
    }
    throw InternalError("bad LieType");
}

void CartanData::reflect(int i, std::vector<int>& c) const {
    int pairing = 0;
    for (int j = 0; j < rank; ++j) pairing += a[i][j] * c[j];
    c[i] -= pairing;
}

CartanData cartan(LieType type, int rank) {
    if (rank < min_rank(type))
        throw DomainError(std::string("rank ") + std::to_string(rank) + " below minimum for type " +
                          type_letter(type));
    CartanData cd;
    cd.type = type;
    cd.rank = rank;
    cd.a.assign(rank, std::vector<int>(rank, 0));
    cd.d.assign(rank, 1);
    int n = rank;
    for (int i = 0; i < n; ++i) cd.a[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) { cd.a[i][i + 1] = -1; cd.a[i + 1][i] = -1; }
    };
    switch (type) {
        case LieType::A:
            chain(n);
            break;
        case LieType::C:
            // long simple root at the end: d = (1,...,1,2)
            chain(n - 1);
            cd.a[n - 2][n - 1] = -2;
            cd.a[n - 1][n - 2] = -1;
            cd.d[n - 1] = 2;
            break;
        case LieType::B:
            // short simple root at the end: d = (2,...,2,1)
            chain(n - 1);
            cd.a[n - 2][n - 1] = -1;
            cd.a[n - 1][n - 2] = -2;
            for (int i = 0; i + 1 < n; ++i) cd.d[i] = 2;
            cd.d[n - 1] = 1;
            break;
        case LieType::D:
            chain(n - 1);
            cd.a[n - 3][n - 1] = -1;
            cd.a[n - 1][n - 3] = -1;
            break;
    }
    return cd;
}

}  // namespace nilrep
