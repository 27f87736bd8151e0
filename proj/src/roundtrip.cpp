#include "pi/roundtrip.hpp"

#include <functional>
#include <map>

#include "pi/correspondence.hpp"
#include "pi/error.hpp"
#include "pi/generators.hpp"

namespace pi {

namespace {

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  // Runs one check; a false return or an exception counts as a failure.
  void check(const std::string& subject, const std::function<bool()>& body) {
    ++result_.checked;
    std::string why;
    try {
      if (body()) return;
      why = "does not hold";
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (result_.failed++ == 0) result_.first_failure = subject + ": " + why;
  }

  PropertyResult done() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::vector<Comb1> random_terms(Rng& rng, std::size_t count, std::size_t min_size) {
  std::vector<Comb1> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t size = min_size + std::uniform_int_distribution<std::size_t>(0, 24)(rng);
    out.push_back(random_comb1(rng, size));
  }
  return out;
}

bool witnesses(const Comb2& u, const Comb1& lhs, const Comb1& rhs) {
  check2(u);
  return endpoints2(u) == Endpoints{lhs, rhs};
}

}  // namespace

std::vector<PropertyResult> run_roundtrip_suite(const RoundtripOptions& opts) {
  std::vector<PropertyResult> results;
  Rng rng(opts.seed);
  const auto small = enumerate_comb1_up_to(opts.max_size);
  const auto large = random_terms(rng, opts.random_terms, opts.max_size + 1);

  {
    Property prop("interp1 . quote1 = id");
    for (const Loop& l : all_loops()) {
      prop.check(std::string(to_string(classify(l))), [&] { return interp1(quote1(l)) == l; });
    }
    results.push_back(prop.done());
  }
  {
    Property prop("interp1 is a homomorphism");
    auto laws = [&](const Comb1& p) {
      if (p.kind() == Comb1Kind::Inv) return interp1(p) == invert(interp1(p.child(0)));
      if (p.kind() == Comb1Kind::Seq) {
        return interp1(p) == compose(interp1(p.child(0)), interp1(p.child(1)));
      }
      return true;
    };
    for (const auto& p : small) prop.check(to_sexpr(p), [&] { return laws(p); });
    for (const auto& p : large) prop.check(to_sexpr(p), [&] { return laws(p); });
    results.push_back(prop.done());
  }
  {
    Property prop("canonical agrees with to_perm");
    auto agree = [](const Comb1& p) {
      Canonical c = canonical(p);
      Which semantic = to_perm(p).is_identity() ? Which::ID : Which::NOT;
      return c.which == semantic && witnesses(c.witness, p, refine(c.which));
    };
    for (const auto& p : small) prop.check(to_sexpr(p), [&] { return agree(p); });
    results.push_back(prop.done());
  }
  {
    Property prop("sound1 p : p <=> quote1 (interp1 p)");
    auto sound = [](const Comb1& p) { return witnesses(sound1(p), p, quote1(interp1(p))); };
    for (const auto& p : small) prop.check(to_sexpr(p), [&] { return sound(p); });
    for (const auto& p : large) prop.check(to_sexpr(p), [&] { return sound(p); });
    results.push_back(prop.done());
  }
  {
    Property prop("complete1 p q exists iff interp1 p = interp1 q");
    auto complete = [](const Comb1& p, const Comb1& q) {
      const bool same = interp1(p) == interp1(q);
      try {
        Comb2 u = complete1(p, q);
        return same && witnesses(u, p, q) && witnesses(completeness1(p, q), p, q);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SemanticMismatch) throw;
        return !same;
      }
    };
    const auto pairs_from = enumerate_comb1_up_to(std::min<std::size_t>(opts.max_size, 4));
    for (const auto& p : pairs_from) {
      for (const auto& q : pairs_from) {
        prop.check(to_sexpr(p) + " , " + to_sexpr(q), [&] { return complete(p, q); });
      }
    }
    for (std::size_t i = 0; i + 1 < large.size(); i += 2) {
      prop.check(to_sexpr(large[i]) + " , " + to_sexpr(large[i + 1]),
                 [&] { return complete(large[i], large[i + 1]); });
    }
    results.push_back(prop.done());
  }
  {
    Property prop("complete1_sem on quoted endpoints");
    for (const Loop& a : all_loops()) {
      for (const Loop& b : all_loops()) {
        Comb1 p = quote1(a);
        Comb1 q = quote1(b);
        prop.check(to_sexpr(p) + " , " + to_sexpr(q), [&] {
          if (a != b) return true;
          return complete1_sem(complete1(p, q)) == mk_two_cell(a, b);
        });
      }
    }
    results.push_back(prop.done());
  }

  std::vector<Comb2> well_formed_cells;
  for (std::size_t n = 1; n <= opts.comb2_max_size; ++n) {
    for (const auto& u : enumerate_comb2(n)) {
      if (well_formed(u)) well_formed_cells.push_back(u);
    }
  }
  {
    Property prop("interp2 total on well-formed 2-combinators");
    for (const auto& u : well_formed_cells) {
      prop.check(to_sexpr(u), [&] {
        TwoCell cell = interp2(u);
        Endpoints e = endpoints2(u);
        return cell.source() == interp1(e.lhs) && cell.target() == interp1(e.rhs);
      });
    }
    results.push_back(prop.done());
  }
  {
    Property prop("quote2 then interp2 = id");
    for (const Loop& l : all_loops()) {
      prop.check(std::string(to_string(classify(l))), [&] {
        TwoCell cell = mk_two_cell(l, l);
        return interp2(quote2(cell)) == cell;
      });
    }
    results.push_back(prop.done());
  }
  {
    Property prop("level-3 triviality on parallel pairs");
    std::map<std::string, std::vector<const Comb2*>> by_boundary;
    for (const auto& u : well_formed_cells) {
      Endpoints e = endpoints2(u);
      by_boundary[to_sexpr(e.lhs) + " " + to_sexpr(e.rhs)].push_back(&u);
    }
    for (const auto& [key, group] : by_boundary) {
      for (std::size_t i = 0; i + 1 < group.size(); ++i) {
        const Comb2& u = *group[i];
        const Comb2& v = *group[i + 1];
        const Comb2& w = *group[(i + 2) % group.size()];
        prop.check(to_sexpr(u) + " , " + to_sexpr(v), [&] {
          Comb3 a = Comb3::trunc(u, v);
          Comb3 b = Comb3::trunc(v, w);
          Level3Confirmation c = triviality_level3(a, b);
          Comb3 q = quote3(c.cell, interp2(w));
          return c.boundary == endpoints2(u) && interp2(q.source()) == c.cell;
        });
      }
    }
    results.push_back(prop.done());
  }
  return results;
}

}  // namespace pi
