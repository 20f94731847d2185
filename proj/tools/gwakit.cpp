#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "gwakit/catalog.hpp"
#include "gwakit/parallel.hpp"

using namespace gwakit;

namespace {

enum Exit { ok = 0, usage = 2, capacity = 3, malformed = 4, verification = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroupPtr group_arg(const std::string& spec, const char* flag) {
  if (spec.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return resolve_group_spec(spec);
  } catch (const CatalogError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void progress(const std::string& msg) { std::cerr << msg << std::endl; }

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text_atomic(out, text);
}

std::vector<GroupWithAction> gwa_list_from(const std::string& in, const std::string& group, json* params) {
  if (!in.empty()) {
    CatalogFile f = read_catalog(in);
    if (f.kind != CatalogKind::gwa_list) throw CatalogError(in + " is not a gwa_list catalog");
    std::vector<GroupWithAction> list;
    try {
      for (const auto& item : f.payload.at("items")) list.push_back(gwa_from_json(item));
      if (f.payload.at("count").get<std::size_t>() != list.size()) throw CatalogError("count disagrees with items");
    } catch (const json::exception& e) {
      throw CatalogError(std::string("malformed gwa_list: ") + e.what());
    }
    if (params) (*params)["in"] = in;
    return list;
  }
  if (params) (*params)["group"] = group;
  return all_gwa_on_group(group_arg(group, "--group"));
}

std::size_t count_c1(const std::vector<XModGwA>& xs) {
  std::size_t n = 0;
  for (const auto& x : xs) n += is_xmod_c1(x) ? 1 : 0;
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups with action, their crossed modules and simplicial counterparts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string group, source, range, target, in, out, filter, format = "csv";
  int jobs = 1, index = -1, target_index = -1, source_index = -1, range_index = -1;
  bool relaxed = false;

  auto* gwa = app.add_subcommand("gwa", "Groups with action")->require_subcommand(1);
  auto* gwa_enum = gwa->add_subcommand("enumerate", "Every action on a group; prints the count");
  gwa_enum->add_option("--group", group, "o:i, A4 or klein4")->required();
  gwa_enum->add_option("--out", out, "Write a gwa_list catalog");
  auto* gwa_cls = gwa->add_subcommand("classify", "Isomorphism classes with ideals, nilpotency, Condition 1");
  gwa_cls->add_option("--in", in, "gwa_list catalog");
  gwa_cls->add_option("--group", group, "Enumerate instead of reading a catalog");
  gwa_cls->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  gwa_cls->add_option("--out", out);
  gwa_cls->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  auto* gwa_ideals = gwa->add_subcommand("ideals", "Ideal counts, or the ideals of one GwA with --index");
  gwa_ideals->add_option("--group", group)->required();
  gwa_ideals->add_option("--index", index, "0-based position in the enumeration");
  auto* gwa_mor = gwa->add_subcommand("morphisms", "GwA morphisms between two enumerated actions");
  gwa_mor->add_option("--group", group)->required();
  gwa_mor->add_option("--index", index)->required();
  gwa_mor->add_option("--target", target)->required();
  gwa_mor->add_option("--target-index", target_index)->required();

  auto* xmod = app.add_subcommand("xmod", "Crossed modules of groups with action")->require_subcommand(1);
  auto* xmod_act = xmod->add_subcommand("actions", "Derived action pairs; a histogram over all pairs without indices");
  xmod_act->add_option("--source", source)->required();
  xmod_act->add_option("--range", range)->required();
  xmod_act->add_option("--source-index", source_index);
  xmod_act->add_option("--range-index", range_index);
  xmod_act->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  auto* xmod_enum = xmod->add_subcommand("enumerate", "Pre-crossed and crossed modules over all action pairs");
  xmod_enum->add_option("--source", source)->required();
  xmod_enum->add_option("--range", range)->required();
  xmod_enum->add_option("--filter", filter)->check(CLI::IsMember({"c1"}));
  xmod_enum->add_option("--out", out, "Write an xmod_enumeration catalog");
  xmod_enum->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  auto* xmod_chk = xmod->add_subcommand("check", "Re-verify every item of an xmod_enumeration catalog");
  xmod_chk->add_option("--in", in)->required();

  auto* simp = app.add_subcommand("simplicial", "Simplicial groups with action")->require_subcommand(1);
  auto* simp_rt = simp->add_subcommand("roundtrip", "xmod -> simplicial -> xmod for every full item");
  simp_rt->add_option("--in", in, "xmod_enumeration catalog");
  simp_rt->add_option("--source", source);
  simp_rt->add_option("--range", range);
  simp_rt->add_option("--out", out, "Write a roundtrip_report catalog");
  simp_rt->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  simp_rt->add_flag("--relaxed", relaxed, "Do not require the two kernel evaluations on R x| S");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (*gwa_enum) {
      auto list = all_gwa_on_group(group_arg(group, "--group"));
      std::cout << list.size() << '\n';
      if (!out.empty()) {
        json items = json::array();
        for (const auto& g : list) items.push_back(gwa_to_json(g));
        write_catalog(out, {kSchemaVersion, CatalogKind::gwa_list, {{"count", list.size()}, {"items", items}},
                            make_provenance("gwa enumerate", {{"group", group}})});
      }
      return Exit::ok;
    }

    if (*gwa_cls) {
      if (in.empty() == group.empty()) throw UsageError("give exactly one of --in and --group");
      json params;
      auto list = gwa_list_from(in, group, &params);
      progress("classifying " + std::to_string(list.size()) + " groups with action");
      auto rows = classify(list, jobs);
      const bool trivial = !list.empty() && list.front().order() == 1;
      if (format == "csv") {
        emit(classification_to_csv(rows), out);
      } else {
        json payload = classification_to_json(rows, trivial);
        if (out.empty())
          std::cout << payload.dump(1) << '\n';
        else
          write_catalog(out, {kSchemaVersion, CatalogKind::classification, payload,
                              make_provenance("gwa classify", params)});
      }
      return Exit::ok;
    }

    if (*gwa_ideals) {
      auto list = all_gwa_on_group(group_arg(group, "--group"));
      if (index >= 0) {
        if (static_cast<std::size_t>(index) >= list.size()) throw UsageError("--index out of range");
        const auto& g = list[static_cast<std::size_t>(index)];
        for (const auto& id : all_ideals(g)) {
          std::cout << '{';
          for (std::size_t i = 0; i < id.elements.size(); ++i)
            std::cout << (i ? ", " : "") << g.group().name(id.elements[i]);
          std::cout << "}\n";
        }
      } else {
        std::map<std::size_t, std::size_t> hist;
        for (const auto& g : list) ++hist[all_ideals(g).size()];
        for (auto [ideals, n] : hist) std::cout << "ideals=" << ideals << " gwas=" << n << '\n';
      }
      return Exit::ok;
    }

    if (*gwa_mor) {
      auto a = all_gwa_on_group(group_arg(group, "--group"));
      auto b = all_gwa_on_group(group_arg(target, "--target"));
      if (index < 0 || static_cast<std::size_t>(index) >= a.size() || target_index < 0 ||
          static_cast<std::size_t>(target_index) >= b.size())
        throw UsageError("index out of range");
      auto ms = all_gwa_morphisms(a[static_cast<std::size_t>(index)], b[static_cast<std::size_t>(target_index)]);
      std::cout << ms.size() << '\n';
      for (const auto& m : ms) {
        for (std::size_t i = 0; i < m.image.size(); ++i) std::cout << (i ? " " : "") << m.image[i];
        std::cout << '\n';
      }
      return Exit::ok;
    }

    if (*xmod_act) {
      auto ss = all_gwa_on_group(group_arg(source, "--source"));
      auto rs = all_gwa_on_group(group_arg(range, "--range"));
      if ((source_index >= 0) != (range_index >= 0)) throw UsageError("give both --source-index and --range-index");
      if (source_index >= 0) {
        if (static_cast<std::size_t>(source_index) >= ss.size() || static_cast<std::size_t>(range_index) >= rs.size())
          throw UsageError("index out of range");
        std::cout << all_xmod_gwa_actions(ss[static_cast<std::size_t>(source_index)],
                                          rs[static_cast<std::size_t>(range_index)])
                         .size()
                  << '\n';
        return Exit::ok;
      }
      std::vector<std::size_t> counts(ss.size() * rs.size());
      parallel_for(counts.size(), jobs, [&](std::size_t k) {
        counts[k] = all_xmod_gwa_actions(ss[k / rs.size()], rs[k % rs.size()]).size();
      });
      std::map<std::size_t, std::size_t> hist;
      for (auto c : counts) ++hist[c];
      for (auto [c, n] : hist) std::cout << "actions=" << c << " pairs=" << n << '\n';
      return Exit::ok;
    }

    if (*xmod_enum) {
      auto s = group_arg(source, "--source");
      auto r = group_arg(range, "--range");
      if (!s->catalog_id() || !r->catalog_id()) throw UsageError("xmod enumerate needs catalog groups (o:i)");
      progress("enumerating crossed modules");
      auto e = all_xmods_by_id(s->catalog_id()->order, s->catalog_id()->index, r->catalog_id()->order,
                               r->catalog_id()->index, jobs);
      std::cout << "pre=" << e.pre.size() << " full=" << e.full.size() << '\n';
      std::optional<std::size_t> c1;
      if (filter == "c1") {
        c1 = count_c1(e.full);
        std::cout << "c1=" << *c1 << '\n';
      }
      if (!out.empty()) {
        json params{{"source", source}, {"range", range}};
        if (c1) params["filter"] = filter;
        write_catalog(out, {kSchemaVersion, CatalogKind::xmod_enumeration, enumeration_to_json(e, c1),
                            make_provenance("xmod enumerate", params)});
      }
      return Exit::ok;
    }

    if (*xmod_chk) {
      CatalogFile f = read_catalog(in);
      if (f.kind != CatalogKind::xmod_enumeration) throw CatalogError(in + " is not an xmod_enumeration catalog");
      auto e = enumeration_from_json(f.payload);
      int bad = 0;
      for (std::size_t i = 0; i < e.full.size(); ++i)
        if (!recheck_xmod_tables(e.full[i])) {
          std::cerr << "item " << i << " fails the independent CM1-CM4 check\n";
          ++bad;
        }
      std::cout << "pre=" << e.pre.size() << " full=" << e.full.size() << " failures=" << bad << '\n';
      return bad ? Exit::verification : Exit::ok;
    }

    if (*simp_rt) {
      std::vector<XModGwA> xs;
      json params;
      if (!in.empty()) {
        CatalogFile f = read_catalog(in);
        if (f.kind != CatalogKind::xmod_enumeration) throw CatalogError(in + " is not an xmod_enumeration catalog");
        xs = enumeration_from_json(f.payload).full;
        params["in"] = in;
      } else {
        auto s = group_arg(source, "--source");
        auto r = group_arg(range, "--range");
        if (!s->catalog_id() || !r->catalog_id()) throw UsageError("roundtrip needs catalog groups (o:i) or --in");
        xs = all_xmods_by_id(s->catalog_id()->order, s->catalog_id()->index, r->catalog_id()->order,
                             r->catalog_id()->index, jobs)
                 .full;
        params = {{"source", source}, {"range", range}};
      }
      if (relaxed) params["relaxed"] = true;
      progress("round trip over " + std::to_string(xs.size()) + " crossed modules");
      std::vector<RoundTripReport> reps(xs.size());
      const auto mode = relaxed ? SemidirectMode::relaxed : SemidirectMode::strict;
      parallel_for(xs.size(), jobs, [&](std::size_t i) { reps[i] = roundtrip(xs[i], mode); });
      json payload = json::array();
      int bad = 0;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        payload.push_back(roundtrip_to_json(i, reps[i]));
        if (!reps[i].ok()) {
          ++bad;
          std::cerr << "xmod " << i << ": " << reps[i].error << '\n';
        }
      }
      std::cout << "checked=" << reps.size() << " failures=" << bad << '\n';
      if (!out.empty())
        write_catalog(out, {kSchemaVersion, CatalogKind::roundtrip_report, payload,
                            make_provenance("simplicial roundtrip", params)});
      return bad ? Exit::verification : Exit::ok;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return Exit::capacity;
  } catch (const CatalogError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return Exit::malformed;
  } catch (const ValidationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return Exit::verification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return Exit::usage;
}
