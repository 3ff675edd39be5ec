#include "minperm/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "minperm/bijection.hpp"
#include "minperm/counting.hpp"
#include "minperm/error.hpp"
#include "minperm/json_io.hpp"
#include "minperm/rsk.hpp"

namespace minperm {

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "counts") return Suite::Counts;
  if (name == "bijection") return Suite::Bijection;
  if (name == "rsk") return Suite::Rsk;
  throw InvalidInput("unknown suite '" + name + "' (expected all, counts, bijection or rsk)");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Counts: return "counts";
    case Suite::Bijection: return "bijection";
    case Suite::Rsk: return "rsk";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json entry = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    list.push_back(std::move(entry));
  }
  return {{"status", passed() ? "PASS" : "FAIL"}, {"checks", std::move(list)}};
}

void for_each_connected_skew_shape(int cells, const std::function<void(const SkewShape&)>& visit) {
  // Columns are built right to left as row intervals [top, bottom]. Moving
  // left, both ends weakly descend, and each column must share a row with
  // its right neighbour.
  std::vector<std::pair<int, int>> cols;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      std::vector<int> bottoms;
      std::vector<int> tops;
      for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        bottoms.push_back(it->second);
        if (it->first > 1) tops.push_back(it->first - 1);
      }
      visit(conjugate(SkewShape(Partition(bottoms), Partition(tops))));
      return;
    }
    const auto [next_top, next_bottom] = cols.back();
    for (int top = next_top; top <= next_bottom; ++top) {
      for (int bottom = std::max(top, next_bottom); bottom - top + 1 <= remaining; ++bottom) {
        cols.push_back({top, bottom});
        extend(remaining - (bottom - top + 1));
        cols.pop_back();
      }
    }
  };
  for (int len = 1; len <= cells; ++len) {
    cols.push_back({1, len});
    extend(cells - len);
    cols.pop_back();
  }
}

SkewShape random_skew_shape(std::mt19937_64& rng, int max_cells) {
  while (true) {
    // Random outer partition from a random multiset of row lengths.
    std::uniform_int_distribution<int> rows_dist(1, 6);
    std::uniform_int_distribution<int> len_dist(1, 7);
    std::vector<int> outer(static_cast<std::size_t>(rows_dist(rng)));
    for (int& v : outer) v = len_dist(rng);
    std::sort(outer.rbegin(), outer.rend());
    std::vector<int> inner;
    int cap = outer[0];
    for (int v : outer) {
      std::uniform_int_distribution<int> in_dist(0, std::min(v, cap));
      const int mu = in_dist(rng);
      inner.push_back(mu);
      cap = mu;
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    SkewShape shape{Partition(outer), Partition(inner)};
    if (shape.cell_count() >= 1 && shape.cell_count() <= max_cells) return shape;
  }
}

std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int v = std::min(remaining, largest); v >= 1; --v) {
      parts.push_back(v);
      rec(remaining - v, v);
      parts.pop_back();
    }
  };
  rec(total, total);
  return out;
}

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  // Runs `body`, turning an escaped InternalError into a failure.
  template <class Body>
  CheckResult run(Body&& body) {
    try {
      body(*this);
    } catch (const InternalError& e) {
      expect(false, [&] { return std::string("internal error: ") + e.what(); });
    }
    return result_;
  }

 private:
  CheckResult result_;
};

std::string str(const Count& c) { return c.get_str(); }

Count ascent_count(const AscentSequence& a, bool fault) {
  RationalMatrix m = ascent_matrix(a);
  if (fault && m.dim() >= 2) m(0, m.dim() - 1) = 0;
  return count_from_matrix(m, a.total());
}

Count determinant_sum(long d, long n, bool fault) {
  if (d < 1 || n < d + 1 || n > 2 * d) return 0;
  Count total = 0;
  for_each_composition_min2(static_cast<int>(n), static_cast<int>(n - d),
                            [&](const AscentSequence& a) { total += ascent_count(a, fault); });
  return total;
}

std::string dn(long d, long n) { return "d=" + std::to_string(d) + ", n=" + std::to_string(n); }

void counts_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const bool fault = opt.inject_fault;
  const long max_n = static_cast<long>(opt.max_n);
  require_within_cap(opt.max_n, opt.limits.max_n, "verify --suite counts");

  std::vector<std::vector<std::uint64_t>> structural(static_cast<std::size_t>(max_n) + 1);
  std::vector<std::vector<std::uint64_t>> deletion(static_cast<std::size_t>(max_n) + 1);
  for (long n = 1; n <= max_n; ++n) {
    structural[static_cast<std::size_t>(n)] = brute_counts_by_descents(static_cast<std::size_t>(n), opt.limits, false);
    deletion[static_cast<std::size_t>(n)] = brute_counts_by_descents(static_cast<std::size_t>(n), opt.limits, true);
  }
  // Brute-force f_d(n), or nullopt beyond the scanned range.
  auto brute = [&](long d, long n) -> std::optional<Count> {
    if (n < 1 || n > max_n || d < 0 || d >= n) return std::nullopt;
    return Count(static_cast<unsigned long>(structural[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)]));
  };
  auto brute_agrees = [&](long d, long n, const Count& value) {
    auto b = brute(d, n);
    return !b || *b == value;
  };

  out.push_back(Check("three_way_agreement").run([&](Check& c) {
    for (long n = 1; n <= max_n; ++n) {
      for (long d = 0; d < n; ++d) {
        const Count det = determinant_sum(d, n, fault);
        const auto s = structural[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
        const auto del = deletion[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
        c.expect(det == s && s == del, [&] {
          return dn(d, n) + ": determinant sum " + str(det) + ", structural brute force " +
                 std::to_string(s) + ", deletion oracle " + std::to_string(del);
        });
      }
    }
  }));

  out.push_back(Check("catalan").run([&](Check& c) {
    for (long n = 1; n <= 8; ++n) {
      const Count det = determinant_sum(n, 2 * n, fault);
      c.expect(det == catalan(n) && brute_agrees(n, 2 * n, det), [&] {
        return "f_" + std::to_string(n) + "(" + std::to_string(2 * n) + ") = " + str(det) +
               " but C_n = " + str(catalan(n));
      });
    }
  }));

  out.push_back(Check("closed_forms").run([&](Check& c) {
    for (long n = 4; n <= 30; ++n) {
      const Count det = determinant_sum(n - 2, n, fault);
      c.expect(det == count_n_minus_2(n) && brute_agrees(n - 2, n, det), [&] {
        return "f_{n-2}(n) at n=" + std::to_string(n) + ": determinant sum " + str(det) +
               ", closed form " + str(count_n_minus_2(n));
      });
    }
    for (long n = 5; n <= 30; ++n) {
      const Count det = determinant_sum(n - 3, n, fault);
      c.expect(det == count_n_minus_3(n) && brute_agrees(n - 3, n, det), [&] {
        return "f_{n-3}(n) at n=" + std::to_string(n) + ": determinant sum " + str(det) +
               ", closed form " + str(count_n_minus_3(n));
      });
    }
    for (long n = 1; n <= 12; ++n) {
      const Count det = determinant_sum(n + 1, 2 * n + 1, fault);
      c.expect(det == count_odd_length(n) && brute_agrees(n + 1, 2 * n + 1, det), [&] {
        return "f_{n+1}(2n+1) at n=" + std::to_string(n) + ": determinant sum " + str(det) +
               ", closed form " + str(count_odd_length(n));
      });
    }
  }));

  out.push_back(Check("ascent_matrix_vs_aitken").run([&](Check& c) {
    for (int total = 2; total <= 12; ++total) {
      for (int k = 1; 2 * k <= total; ++k) {
        for_each_composition_min2(total, k, [&](const AscentSequence& a) {
          const Count banded = ascent_count(a, fault);
          const Count generic = aitken_count(shape_from_ascent_sequence(a));
          c.expect(banded == generic, [&] {
            return "ascents " + format_ascent_sequence(a) + ": banded determinant " + str(banded) +
                   ", Aitken " + str(generic);
          });
        });
      }
    }
  }));

  out.push_back(Check("refinement_identities").run([&](Check& c) {
    for (long n = 1; n <= 12; ++n) {
      for (long i = 1; i <= n; ++i) {
        Count sum = 0;
        for (long k = 1; k <= std::min(i, n - i + 1); ++k) sum += count_three_row(n, k);
        c.expect(sum == count_refined(n, i) && count_refined(n, i) == count_refined(n, n - i + 1), [&] {
          return "n=" + std::to_string(n) + ", i=" + std::to_string(i) + ": sum of three-row counts " +
                 str(sum) + ", refined count " + str(count_refined(n, i));
        });
      }
    }
    for (long n = 1; n <= 10; ++n) {
      for (long k = 1; k <= (n + 1) / 2; ++k) {
        const Count hooks = hook_count(Partition({static_cast<int>(n), static_cast<int>(n + 1 - k),
                                                  static_cast<int>(k)}));
        c.expect(hooks == count_three_row(n, k), [&] {
          return "shape (n, n+1-k, k) with n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                 ": hook count " + str(hooks) + ", formula " + str(count_three_row(n, k));
        });
      }
    }
    for (long n = 1; n <= 8; ++n) {
      for (long i = 1; i <= n; ++i) {
        std::vector<int> inner;
        if (i > 1) inner.push_back(static_cast<int>(i - 1));
        const SkewShape shape(Partition({static_cast<int>(n), static_cast<int>(n), static_cast<int>(i)}),
                              Partition(inner));
        const Count a = aitken_count(shape);
        c.expect(a == count_refined(n, i), [&] {
          return "shape " + format_shape(shape) + ": Aitken " + str(a) + ", refined count " +
                 str(count_refined(n, i));
        });
      }
    }
  }));

  out.push_back(Check("aitken_vs_backtracking").run([&](Check& c) {
    for (int cells = 1; cells <= 12; ++cells) {
      for_each_connected_skew_shape(cells, [&](const SkewShape& s) {
        if (!is_two_regular(s)) return;
        const Count a = aitken_count(s);
        const Count b = count_skew_syt(s);
        c.expect(a == b, [&] { return format_shape(s) + ": Aitken " + str(a) + ", backtracking " + str(b); });
      });
    }
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < 200; ++t) {
      const SkewShape s = random_skew_shape(rng, 12);
      const Count a = aitken_count(s);
      const Count b = count_skew_syt(s);
      const Count tr = aitken_count(conjugate(s));
      c.expect(a == b && a == tr, [&] {
        return format_shape(s) + ": Aitken " + str(a) + ", backtracking " + str(b) + ", transposed " + str(tr);
      });
    }
    for (int total = 1; total <= 15; ++total) {
      for (const Partition& p : partitions_of(total)) {
        const Count h = hook_count(p);
        const Count a = aitken_count(SkewShape(p));
        c.expect(h == a, [&] { return format_partition(p) + ": hook " + str(h) + ", Aitken " + str(a); });
      }
    }
  }));
}

const std::vector<int> kExamplePerm{16, 13, 4, 1, 7, 3, 14, 12, 9, 5, 2, 11, 10, 6, 15, 8};

SkewTableau example_tableau() {
  // Drawn top to bottom; inner cells precede each row's entries.
  return SkewTableau(parse_shape("5,5,4,3,3,3,1,1/3,2,2,2"),
                     {{6, 8}, {2, 10, 15}, {5, 11}, {9}, {1, 3, 12}, {4, 7, 14}, {13}, {16}});
}

void bijection_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const std::size_t max_n = std::min<std::size_t>(opt.max_n, 10);
  require_within_cap(max_n, opt.limits.max_n, "verify --suite bijection");

  std::map<std::vector<int>, std::uint64_t> perms_by_runs;
  out.push_back(Check("perm_round_trip").run([&](Check& c) {
    for (std::size_t n = 2; n <= max_n; ++n) {
      for (const Permutation& p : enumerate_minimal(n, {}, opt.limits)) {
        ++perms_by_runs[maximal_decreasing_runs(p).parts()];
        bool ok = false;
        try {
          const SkewTableau t = perm_to_tableau(p);
          ok = is_two_regular(t) && tableau_to_perm(t) == p;
        } catch (const InvalidInput&) {
        }
        c.expect(ok, [&] { return "permutation " + format_permutation(p) + " fails the round trip"; });
      }
    }
  }));

  std::map<std::vector<int>, std::uint64_t> tableaux_by_columns;
  out.push_back(Check("tableau_round_trip").run([&](Check& c) {
    for (int cells = 2; cells <= static_cast<int>(max_n); ++cells) {
      for_each_connected_skew_shape(cells, [&](const SkewShape& s) {
        if (!is_two_regular(s)) return;
        std::vector<int> lengths;
        for (int col = 1; col <= s.columns(); ++col) {
          auto e = s.column_extent(col);
          lengths.push_back(e->second - e->first + 1);
        }
        for_each_skew_syt(s, [&](const SkewTableau& t) {
          ++tableaux_by_columns[lengths];
          bool ok = false;
          try {
            const Permutation p = tableau_to_perm(t);
            ok = is_minimal(p) && perm_to_tableau(p) == t;
          } catch (const InvalidInput&) {
          }
          c.expect(ok, [&] { return "tableau " + tableau_to_json(t).dump() + " fails the round trip"; });
        });
      });
    }
  }));

  out.push_back(Check("class_cardinality").run([&](Check& c) {
    for (int total = 2; total <= static_cast<int>(max_n); ++total) {
      for (int k = 1; 2 * k <= total; ++k) {
        for_each_composition_min2(total, k, [&](const AscentSequence& a) {
          const auto perms = perms_by_runs[a.parts()];
          const auto tabs = tableaux_by_columns[a.parts()];
          const Count det = ascent_count(a, opt.inject_fault);
          c.expect(perms == tabs && Count(static_cast<unsigned long>(perms)) == det, [&] {
            return "ascents " + format_ascent_sequence(a) + ": " + std::to_string(perms) +
                   " permutations, " + std::to_string(tabs) + " tableaux, determinant " + str(det);
          });
        });
      }
    }
  }));

  out.push_back(Check("worked_example").run([&](Check& c) {
    const Permutation p{std::vector<int>(kExamplePerm)};
    c.expect(perm_to_tableau(p) == example_tableau(), [] { return "16-element example maps elsewhere"; });
    c.expect(tableau_to_perm(example_tableau()) == p, [] { return "16-element tableau reads elsewhere"; });
  }));
}

void rsk_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const std::size_t max_len = std::min<std::size_t>(opt.max_n, 9);
  require_within_cap(max_len, opt.limits.max_n, "verify --suite rsk");

  out.push_back(Check("refined_classes").run([&](Check& c) {
    for (std::size_t n = 1; 2 * n + 1 <= max_len; ++n) {
      for (std::size_t i = 1; i <= n; ++i) {
        MinimalFilter filter;
        filter.descents = n + 1;
        filter.consecutive_descents_at = 2 * i - 1;
        const auto members = enumerate_minimal(2 * n + 1, filter, opt.limits);
        const std::string where = "n=" + std::to_string(n) + ", i=" + std::to_string(i);
        c.expect(Count(static_cast<unsigned long>(members.size())) ==
                     count_refined(static_cast<long>(n), static_cast<long>(i)),
                 [&] { return where + ": " + std::to_string(members.size()) + " members"; });

        std::set<YoungTableau> image;
        for (const Permutation& p : members) {
          const Permutation target = rearrange_tail(p);
          const YoungTableau insertion = forward_map(p);
          Permutation w = p;
          bool legal = true;
          for (const KnuthMove& m : knuth_chain(p)) {
            w = apply_knuth_move(w, m);
            legal = legal && rsk(w).insertion == insertion;
          }
          c.expect(legal && w == target, [&] {
            return "chain from " + format_permutation(p) + " is not a P-preserving path to " +
                   format_permutation(target);
          });

          const Partition shape = insertion.shape();
          const long k = shape.length() == 3 ? shape.part(2) : 0;
          const bool shape_ok = shape.length() == 3 && shape.part(0) == static_cast<int>(n) &&
                                shape.part(1) == static_cast<int>(n) + 1 - k && k >= 1 &&
                                k <= static_cast<long>(std::min(i, n - i + 1));
          c.expect(shape_ok, [&] { return format_permutation(p) + " has P of shape " + format_partition(shape); });

          const std::vector<int> prefix(target.word().begin(),
                                        target.word().begin() + static_cast<std::ptrdiff_t>(n + i));
          const Partition prefix_shape = rsk(prefix).insertion.shape();
          c.expect(prefix_shape == Partition({static_cast<int>(n), static_cast<int>(i)}), [&] {
            return format_permutation(p) + ": prefix insertion shape " + format_partition(prefix_shape);
          });
          image.insert(insertion);
        }
        c.expect(image.size() == members.size(), [&] { return where + ": forward map is not injective"; });

        std::set<YoungTableau> expected;
        for (std::size_t k = 1; k <= std::min(i, n - i + 1); ++k) {
          const SkewShape s(Partition({static_cast<int>(n), static_cast<int>(n + 1 - k), static_cast<int>(k)}));
          for_each_skew_syt(s, [&](const SkewTableau& t) { expected.insert(YoungTableau::from_skew(t)); });
        }
        c.expect(image == expected, [&] { return where + ": image differs from the three-row tableaux"; });
        for (const YoungTableau& t : expected) {
          auto back = inverse_forward_map(t, i);
          c.expect(back && forward_map(*back) == t, [&] { return where + ": a tableau has no reconstructed preimage"; });
        }
      }
    }
  }));

  out.push_back(Check("worked_chain").run([&](Check& c) {
    const Permutation p = parse_permutation("6 3 7 4 1 5 2 9 8 11 10 13 12");
    Permutation w = p;
    for (const KnuthMove& m : knuth_chain(p)) w = apply_knuth_move(w, m);
    c.expect(w == parse_permutation("6 3 7 4 5 9 11 13 1 2 8 10 12"),
             [&] { return "13-element chain ends at " + format_permutation(w); });
  }));

  out.push_back(Check("insertion_paths").run([&](Check& c) {
    std::mt19937_64 rng(opt.seed + 1);
    for (int t = 0; t < 1000; ++t) {
      std::uniform_int_distribution<int> size_dist(0, 8);
      const int m = size_dist(rng);
      std::vector<int> pool(static_cast<std::size_t>(2 * m + 2));
      std::iota(pool.begin(), pool.end(), 1);
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::vector<int> word(pool.begin(), pool.begin() + m);
      int j = pool[static_cast<std::size_t>(m)];
      int k = pool[static_cast<std::size_t>(m) + 1];
      if (j > k) std::swap(j, k);
      const YoungTableau base = rsk(word).insertion;
      const auto first = row_insert(base, j);
      const auto second = row_insert(first.tableau, k);
      bool ok = second.path.size() <= first.path.size();
      for (const auto* path : {&first.path, &second.path}) {
        for (std::size_t r = 1; r < path->size(); ++r) {
          ok = ok && (*path)[r].row == (*path)[r - 1].row + 1 && (*path)[r].column <= (*path)[r - 1].column;
        }
      }
      for (std::size_t r = 0; r < std::min(first.path.size(), second.path.size()); ++r) {
        ok = ok && first.path[r].column < second.path[r].column;
      }
      c.expect(ok, [&] { return "insert " + std::to_string(j) + " then " + std::to_string(k) + " breaks path laws"; });
    }
  }));
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  const bool all = options.suite == Suite::All;
  if (all || options.suite == Suite::Counts) counts_suite(options, report.checks);
  if (all || options.suite == Suite::Bijection) bijection_suite(options, report.checks);
  if (all || options.suite == Suite::Rsk) rsk_suite(options, report.checks);
  return report;
}

}  // namespace minperm
