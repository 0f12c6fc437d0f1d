// Copyright 2026 The dockspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include "dockspec/error.hpp"
#include "dockspec/syntax/ast.hpp"
#include "dockspec/syntax/dockerfile.hpp"
#include "dockspec/syntax/shell.hpp"
#include "fixtures.hpp"

using namespace dockspec;
using namespace dockspec::syntax;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

std::vector<std::string> texts(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.text);
  return out;
}

}  // namespace

TEST_CASE("single FROM line") {
  const auto doc = parse_dockerfile("FROM tomcat:7.0.75-jre8\n");
  REQUIRE(doc.instructions.size() == 1);
  CHECK(doc.instructions[0].kind == InstructionKind::kFrom);
  CHECK(doc.instructions[0].raw_arguments == "tomcat:7.0.75-jre8");
  CHECK(doc.instructions[0].line_span == LineSpan{1, 1});
  CHECK(doc.from_count() == 1);
}

TEST_CASE("empty and comment-only input is rejected") {
  CHECK(code_of([] { parse_dockerfile(""); }) == ErrorCode::kEmptyInput);
  CHECK(code_of([] { parse_dockerfile("# just a note\n\n"); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("unknown keyword reports its line") {
  try {
    parse_dockerfile("FROM alpine\nFROBNICATE x\n");
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedInstruction);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("continuations join with a single space") {
  const auto doc = parse_dockerfile("RUN a \\\n  b\n# c\n");
  REQUIRE(doc.instructions.size() == 1);
  CHECK(doc.instructions[0].raw_arguments == "a b");
  CHECK(doc.instructions[0].line_span == LineSpan{1, 2});
  REQUIRE(doc.comments.size() == 1);
  CHECK(doc.comments[0].text == "c");
  CHECK(doc.comments[0].line == 3);
}

TEST_CASE("comment inside a continuation block stands alone") {
  const auto doc = parse_dockerfile("RUN apt-get update && \\\n# Install git\n    apt-get install git\n");
  REQUIRE(doc.instructions.size() == 1);
  CHECK(doc.instructions[0].raw_arguments == "apt-get update && apt-get install git");
  REQUIRE(doc.comments.size() == 1);
  CHECK(doc.comments[0].text == "Install git");
  CHECK(doc.comments[0].line == 2);
}

TEST_CASE("keywords are case-insensitive and CRLF is accepted") {
  const auto doc = parse_dockerfile("from alpine\r\nrun echo hi\r\n");
  REQUIRE(doc.instructions.size() == 2);
  CHECK(doc.instructions[1].kind == InstructionKind::kRun);
  CHECK(doc.instructions[1].raw_arguments == "echo hi");
}

TEST_CASE("blank lines are recorded") {
  const auto doc = parse_dockerfile("FROM alpine\n\n   \nRUN true\n");
  CHECK(doc.blank_lines == std::set<std::size_t>{2, 3});
}

TEST_CASE("content hash depends only on the text") {
  const auto a = parse_dockerfile("FROM alpine\n");
  const auto b = parse_dockerfile("FROM alpine\n");
  const auto c = parse_dockerfile("FROM  alpine\n");
  CHECK(a.content_hash == b.content_hash);
  CHECK(a.content_hash != c.content_hash);
  CHECK(a.content_hash.size() == 40);
}

TEST_CASE("exec form") {
  const auto doc = parse_dockerfile("CMD [\"nginx\", \"-g\", \"daemon off;\"]\nCMD nginx -g x\n");
  const auto elems = exec_form(doc.instructions[0]);
  REQUIRE(elems);
  CHECK(*elems == std::vector<std::string>{"nginx", "-g", "daemon off;"});
  CHECK_FALSE(exec_form(doc.instructions[1]));
}

TEST_CASE("serialize round trip keeps the instruction sequence") {
  const std::string text = fixture_text("tomcat_ffmpeg.Dockerfile");
  const auto once = parse_dockerfile(text);
  const auto twice = parse_dockerfile(serialize_dockerfile(once));
  CHECK(once.instructions.size() == twice.instructions.size());
  for (std::size_t i = 0; i < once.instructions.size(); ++i) {
    CHECK(once.instructions[i].kind == twice.instructions[i].kind);
    CHECK(once.instructions[i].raw_arguments == twice.instructions[i].raw_arguments);
  }
  CHECK(once.comments.size() == twice.comments.size());
}

TEST_CASE("shell: split on &&") {
  const auto st = parse_shell("apt-get update && apt-get install -y git");
  REQUIRE(st.size() == 2);
  CHECK(st[0].command.text == "apt-get");
  CHECK(texts(st[0].arguments) == std::vector<std::string>{"update"});
  CHECK(st[0].connector_to_next == Connector::kAnd);
  CHECK(texts(st[1].arguments) == std::vector<std::string>{"install", "-y", "git"});
  CHECK(st[1].connector_to_next == Connector::kNone);
}

TEST_CASE("shell: quoted connectors are literal") {
  const auto st = parse_shell("echo 'a && b'");
  REQUIRE(st.size() == 1);
  CHECK(texts(st[0].arguments) == std::vector<std::string>{"a && b"});
  CHECK(st[0].arguments[0].raw == "'a && b'");
}

TEST_CASE("shell: connectors and operators") {
  const auto st = parse_shell("a || b; c | d & e");
  REQUIRE(st.size() == 5);
  CHECK(st[0].connector_to_next == Connector::kOr);
  CHECK(st[1].connector_to_next == Connector::kSemicolon);
  CHECK(st[2].connector_to_next == Connector::kPipe);
  CHECK(st[3].connector_to_next == Connector::kBackground);
}

TEST_CASE("shell: substitutions stay inside one word") {
  const auto st = parse_shell("echo $(uname -a && id) ${HOME} `date; true`");
  REQUIRE(st.size() == 1);
  CHECK(st[0].arguments.size() == 3);
}

TEST_CASE("shell: redirections are not arguments") {
  const auto st = parse_shell("echo deb x >> /etc/apt/sources.list 2>&1");
  REQUIRE(st.size() == 1);
  CHECK(texts(st[0].arguments) == std::vector<std::string>{"deb", "x"});
  REQUIRE(st[0].redirects.size() == 2);
  CHECK(st[0].redirects[0].op == ">>");
  CHECK(st[0].redirects[0].target.text == "/etc/apt/sources.list");
}

TEST_CASE("shell: syntax errors") {
  for (const char* bad : {"a && ", "&& b", "echo 'open", "cat <<EOF", "a ; ; b", "a |", ""}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_shell(bad); }) == ErrorCode::kShellSyntax);
  }
}

TEST_CASE("shell: rendering reproduces the token stream") {
  for (const char* script :
       {"apt-get update && apt-get install -y git", "a || b; c | d", "echo \"x y\" > f; ls -la",
        "cd /tmp\nmake"}) {
    CAPTURE(script);
    const auto st = parse_shell(script);
    CHECK(parse_shell(render_statements(st)) == st);
  }
}

TEST_CASE("AST of a FROM-only document has three nodes") {
  const auto ast = build_ast(parse_dockerfile("FROM tomcat:7.0.75-jre8\n"));
  CHECK(ast_size(ast) == 3);
  CHECK(ast.root.label == "dockerfile");
  CHECK(ast.root.children[0].label == "FROM");
  CHECK(ast.root.children[0].children[0].label == "tomcat:7.0.75-jre8");
  CHECK(tree_size(TreeNode{"x", {}}) == 1);
}

TEST_CASE("AST of the Tomcat/FFmpeg example") {
  const auto doc = parse_dockerfile(fixture_text("tomcat_ffmpeg.Dockerfile"));
  const auto ast = build_ast(doc);
  // One FROM, three RUN and three WORKDIR instructions.
  REQUIRE(ast.root.children.size() == 7);
  std::map<std::string, int> kinds;
  for (const auto& c : ast.root.children) ++kinds[c.label];
  CHECK(kinds["FROM"] == 1);
  CHECK(kinds["RUN"] == 3);
  CHECK(kinds["WORKDIR"] == 3);
  // RUN children are statements labeled by command.
  CHECK(ast.root.children[1].children[0].label == "echo");
  CHECK(ast.root.children[1].children[1].label == "apt-get");
  CHECK(ast_size(build_ast(parse_dockerfile(doc.raw_text))) == ast_size(ast));
}

TEST_CASE("exec-form instructions get one leaf per element") {
  const auto ast = build_ast(parse_dockerfile("FROM a\nCMD [\"sh\", \"-c\", \"echo hi\"]\n"));
  REQUIRE(ast.root.children.size() == 2);
  CHECK(ast.root.children[1].children.size() == 3);
  CHECK(ast.root.children[1].children[2].label == "echo hi");
}
