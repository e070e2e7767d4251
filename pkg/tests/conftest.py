"""Collects acceptance-criterion outcomes and prints one line per criterion."""

from collections import OrderedDict

_criteria: "OrderedDict[int, dict]" = OrderedDict()
_owner: dict[str, int] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is None:
            continue
        number, title = mark.args
        entry = _criteria.setdefault(number, {"title": title, "ok": True, "ran": 0, "notes": []})
        _owner[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _owner.get(report.nodeid)
    if number is None:
        return
    entry = _criteria[number]
    if report.when == "call":
        entry["ran"] += 1
    if report.failed:
        entry["ok"] = False
        entry["notes"].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        if entry["ran"] == 0 and entry["ok"]:
            status = "NOT RUN"
        else:
            status = "PASS" if entry["ok"] else "FAIL"
        extra = f"  ({', '.join(entry['notes'])})" if entry["notes"] else ""
        terminalreporter.write_line(f"criterion {number:2d} {status:7s} {entry['title']}{extra}")
