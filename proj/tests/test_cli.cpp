#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  Json doc() const { return Json::parse(out); }
};

Run cli(const std::string &args) {
  std::string cmd = std::string(CYCPERM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("stat") {
  Run r = cli("stat --kind Des --perm 4,2,1,8,5,9,6");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] == Json::parse("[1,2,4,6]"));
  CHECK(r.doc()["command"] == "stat");

  r = cli("stat --kind cdes --cyclic --perm 3,7,2,5");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] == 2);

  r = cli("stat --kind des --perm \"\"");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] == 0);

  CHECK(cli("--format table stat --kind cdes --cyclic --perm 3725").out ==
        "2\n");
  CHECK(cli("stat --kind des --perm 1,x").code == 2);
  CHECK(cli("stat --kind des --perm 1,2,1").code == 2);
  CHECK(cli("stat --kind inv --perm 12").code == 2);
}

TEST_CASE("shuffle") {
  Run r = cli("shuffle --left 2,5 --right 7,3");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] ==
        Json::parse("[[2,5,7,3],[2,7,3,5],[2,7,5,3],[7,2,3,5],[7,2,5,3],"
                    "[7,3,2,5]]"));

  r = cli("shuffle --cyclic --left 1,3 --right 2,4");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"].size() == 6);
  CHECK(r.doc()["result"][0] == Json::parse("[1,2,3,4]"));

  r = cli("shuffle --left 2,5 --right 7,3 --stat des");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] == Json::parse("[1,1,1,2,2,2]"));
  CHECK(cli("--format table shuffle --left 2,5 --right 7,3 --stat des").out ==
        "{{1^3, 2^3}}\n");

  CHECK(cli("shuffle --left 1,2 --right 2,3").code != 0);
}

TEST_CASE("verify") {
  Run r = cli("verify --stat cPk --max 6");
  CHECK(r.code == 0);
  CHECK(r.doc()["verdict"] == "compatible");

  r = cli("verify --stat bru --max 6");
  CHECK(r.code == 1);
  Json doc = r.doc();
  CHECK(doc["verdict"] == "counterexample");
  CHECK(doc["counterexample"]["left"] != doc["counterexample"]["right"]);

  CHECK(cli("verify --stat des --max 2").code == 0);
  CHECK(cli("verify --stat inv --max 4").code == 2);
  CHECK(cli("verify --stat des --max 4 --reduction sideways").code == 2);
  CHECK(cli("--jobs 2 verify --stat cdes --max 5 --reduction quadruple")
            .code == 0);
}

TEST_CASE("lifting") {
  Run r = cli("lifting --cstat cDes --stat Des --cond a --max 6");
  CHECK(r.code == 0);
  CHECK(r.doc()["verdict"] == "holds");

  r = cli("lifting --cstat cdes --stat des --cond b --max 6");
  CHECK(r.code == 0);
  CHECK(r.doc()["verdict"] == "holds");

  r = cli("lifting --cstat cDes --stat des --cond a --max 5");
  CHECK(r.code == 1);
  CHECK(r.doc()["verdict"] == "violation");
  CHECK(r.doc()["counterexample"].contains("first"));

  CHECK(cli("lifting --cstat Des --stat Des --cond a --max 4").code == 2);
}

TEST_CASE("avoid") {
  Run r = cli("avoid --n 4");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] == 6);

  r = cli("avoid --n 3 --patterns 1,2,3");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] == 1);

  r = cli("avoid --n 3 --patterns 1,2,3 --poly");
  CHECK(r.code == 0);
  CHECK(r.doc()["result"] == Json::parse("[0,0,1]"));

  CHECK(cli("avoid --n 3 --patterns 2,3,4").code == 2);
  CHECK(cli("avoid --n 0").code == 2);
}

TEST_CASE("usage errors and JSON round trip") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("--help").code == 0);
  Run r = cli("stat --kind cDes --cyclic --perm 3725");
  std::string line = r.out.substr(0, r.out.find('\n'));
  CHECK(Json::parse(line).dump() == line);
}
