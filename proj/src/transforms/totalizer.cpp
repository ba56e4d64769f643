#include "bakit/transforms.hpp"

namespace bakit {

namespace {

Term sum_of(const std::string& y, const std::vector<std::string>& zs) {
    Term t = Term::var(y);
    for (auto& z : zs) t = Term::add(t, Term::var(z));
    return t;
}

std::string take_fresh(const std::string& base, VarSet& avoid) {
    std::string v = fresh_var(base + "'", avoid);
    avoid.insert(v);
    return v;
}

// nested one-variable blocks, each bounded by `bound`
Formula bounded_blocks(const std::vector<std::string>& vs, const Term& bound, Formula inner) {
    for (auto it = vs.rbegin(); it != vs.rend(); ++it)
        inner = Formula::block({*it}, Formula::lt(Term::var(*it), bound), inner);
    return inner;
}

Formula rename_witness(const TotalizerInput& in, const std::string& y, const std::vector<std::string>& zs) {
    Substitution s{{in.y, Term::var(y)}};
    for (std::size_t i = 0; i < zs.size(); ++i) s.emplace_back(in.zs[i], Term::var(zs[i]));
    return substitute(in.A, s);
}

struct Builder {
    const TotalizerInput& in;
    VarSet avoid;

    Formula B(const std::string& y, const std::vector<std::string>& zs, Formula* u_out = nullptr) {
        Term t = sum_of(y, zs);
        Formula u = uniqueness_bound(t, avoid);
        for (auto& v : all_vars(u)) avoid.insert(v);
        if (u_out) *u_out = u;
        std::string y2 = take_fresh(y, avoid);
        std::vector<std::string> zs2;
        for (auto& z : zs) zs2.push_back(take_fresh(z, avoid));
        Term bound = Term::succ(t);
        Formula guard = Formula::conj(Formula::lt(sum_of(y2, zs2), bound), rename_witness(in, y2, zs2));
        std::vector<std::string> all{y2};
        all.insert(all.end(), zs2.begin(), zs2.end());
        Formula uniq = bounded_blocks(all, bound, Formula::implies(guard, Formula::eq(Term::var(y), Term::var(y2))));
        return Formula::conj(Formula::conj(u, rename_witness(in, y, zs)), uniq);
    }
};

void check_input(const TotalizerInput& in) {
    auto bad = [](const std::string& m) { throw TransformError("BadTotalizerInput", m); };
    if (in.zs.empty()) bad("witness list is empty");
    if (!is_positive(in.A) || !is_quantifier_free(in.A)) bad("A must be positive and quantifier-free");
    VarSet seen;
    auto add = [&](const std::string& v) {
        if (!seen.insert(v).second) bad("variable lists overlap at " + v);
    };
    for (auto& x : in.xs) add(x);
    add(in.y);
    for (auto& z : in.zs) add(z);
    for (auto& v : free_vars(in.A))
        if (!seen.count(v)) bad("free variable " + v + " not listed");
}

}  // namespace

Formula uniqueness_bound(const Term& x, const VarSet& avoid) {
    VarSet av = avoid;
    for (auto& v : vars_of(x)) av.insert(v);
    std::string u = fresh_var("u", av);
    av.insert(u);
    std::string v = fresh_var("v", av);
    av.insert(v);
    std::string w = fresh_var("w", av);
    Term tu = Term::var(u), tv = Term::var(v), tw = Term::var(w);
    Term bound = Term::succ(x);
    Formula body = Formula::implies(
        Formula::conj(Formula::lt(Term::add(Term::add(tu, tv), tw), bound),
                      Formula::eq(Term::add(tu, tw), Term::add(tv, tw))),
        Formula::eq(tu, tv));
    return bounded_blocks({u, v, w}, bound, body);
}

TotalizerParts sigma1_totalizer_parts(const TotalizerInput& in) {
    check_input(in);
    Builder b{in, {}};
    for (auto& x : in.xs) b.avoid.insert(x);
    b.avoid.insert(in.y);
    for (auto& z : in.zs) b.avoid.insert(z);
    for (auto& v : all_vars(in.A)) b.avoid.insert(v);

    TotalizerParts p{Formula::top(), Formula::top(), Formula::top(), Formula::top()};
    p.B = b.B(in.y, in.zs, &p.U);

    Term t = sum_of(in.y, in.zs);
    std::string y1 = take_fresh(in.y, b.avoid);
    std::vector<std::string> zs1;
    for (auto& z : in.zs) zs1.push_back(take_fresh(z, b.avoid));
    Formula inner_b = b.B(y1, zs1);
    std::vector<std::string> all{y1};
    all.insert(all.end(), zs1.begin(), zs1.end());
    Term bound = Term::succ(t);
    Formula none = bounded_blocks(all, bound,
                                  Formula::implies(Formula::lt(sum_of(y1, zs1), bound), Formula::negate(inner_b)));
    p.C = Formula::conj(Formula::conj(Formula::negate(p.U), Formula::eq(Term::var(in.y), Term::zero())), none);

    Formula d = Formula::disj(p.B, p.C);
    for (auto it = in.zs.rbegin(); it != in.zs.rend(); ++it) d = Formula::exists(*it, d);
    p.D = d;
    return p;
}

Formula sigma1_totalizer(const TotalizerInput& in) { return sigma1_totalizer_parts(in).D; }

}  // namespace bakit
