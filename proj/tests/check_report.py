#!/usr/bin/env python3
"""Validates sqf JSON reports against the shipped schema and the text report.

usage: check_report.py <sqf binary> <schema>
"""
import json
import subprocess
import sys

import jsonschema


def run(sqf, *args):
    return subprocess.run([sqf, *args], capture_output=True, text=True)


def text_verdicts(text):
    out, entry = {}, None
    for line in text.splitlines():
        if not line or line.startswith('overall:'):
            continue
        if not line.startswith(' '):
            entry, status = line.split(': ', 1)
            out[entry] = status
        else:
            check, rest = line.strip().split(': ', 1)
            out[entry + '/' + check] = rest.split(' ', 1)[0]
    return out


def main(sqf, schema_path):
    schema = json.load(open(schema_path))
    bad = 0
    for extra in ([], ['--timings'], ['--entry', 'D6', '--check', 'extension']):
        r = run(sqf, 'verify', '--format', 'json', *extra)
        if r.returncode != 0:
            print('exit', r.returncode, extra)
            bad += 1
        rep = json.loads(r.stdout)
        try:
            jsonschema.validate(rep, schema)
        except jsonschema.ValidationError as e:
            print('schema:', e.message)
            bad += 1
    a = run(sqf, 'verify', '--format', 'json').stdout
    b = run(sqf, 'verify', '--format', 'json', '--jobs', '1').stdout
    if a != b:
        print('json output differs between runs')
        bad += 1
    rep = json.loads(a)
    want = {}
    for e in rep['entries']:
        want[e['id']] = e['status']
        for c in e['checks']:
            want[e['id'] + '/' + c['check']] = c['status']
    got = text_verdicts(run(sqf, 'verify').stdout)
    if got != want:
        print('text and json verdicts differ:', set(got.items()) ^ set(want.items()))
        bad += 1
    print('report checks:', 'ok' if bad == 0 else '%d problem(s)' % bad)
    return 1 if bad else 0


if __name__ == '__main__':
    sys.exit(main(sys.argv[1], sys.argv[2]))
