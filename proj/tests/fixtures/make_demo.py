#!/usr/bin/env python3
"""Regenerates the demo dictionary and corpus used by tests and the README.

Output is deterministic; rerunning overwrites dictionary.jsonl, corpus.jsonl,
weights.json, corpus_with_malformed.jsonl, threshold_corpus.jsonl and the
small/ corpora next to this script.
"""

import json
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

DISEASE = "T047"
MENTAL = "T048"
DRUG = "T121"
VIRUS = "T005"
PLANT = "T002"
DIAG = "T060"
IMMUNO = "T129"
GEO = "T083"
ANAT = "T023"

# id, preferred term, synonyms, tree numbers, semantic types
CONCEPTS = [
    # categories
    ("D002318", "Cardiovascular Diseases", [], ["C14"], [DISEASE]),
    ("D006331", "Heart Diseases", ["cardiac disease"], ["C14.280"], [DISEASE]),
    ("D009202", "Cardiomyopathies", ["cardiomyopathy"], ["C14.280.238"], [DISEASE]),
    ("D014652", "Vascular Diseases", [], ["C14.907"], [DISEASE]),
    ("D017202", "Myocardial Ischemia", [], ["C14.280.647"], [DISEASE]),
    ("D009422", "Nervous System Diseases", [], ["C10"], [DISEASE]),
    ("D002493", "Central Nervous System Diseases", [], ["C10.228"], [DISEASE]),
    ("D001927", "Brain Diseases", [], ["C10.228.140"], [DISEASE]),
    ("D002561", "Cerebrovascular Disorders", [], ["C10.228.140.300", "C14.907.253"], [DISEASE]),
    ("D010523", "Peripheral Nervous System Diseases", [], ["C10.668"], [DISEASE]),
    ("D009750", "Nutritional and Metabolic Diseases", [], ["C18"], [DISEASE]),
    ("D009748", "Nutrition Disorders", [], ["C18.654"], [DISEASE]),
    ("D003677", "Deficiency Diseases", [], ["C18.654.521"], [DISEASE]),
    ("D001361", "Avitaminosis", ["vitamin deficiency"], ["C18.654.521.500"], [DISEASE]),
    ("D012140", "Respiratory Tract Diseases", [], ["C08"], [DISEASE]),
    ("D001982", "Bronchial Diseases", [], ["C08.127"], [DISEASE]),
    ("D005128", "Eye Diseases", [], ["C11"], [DISEASE]),
    ("D012164", "Retinal Diseases", [], ["C11.768"], [DISEASE]),
    ("D001523", "Mental Disorders", [], ["F03"], [MENTAL]),
    ("D001706", "Bone Diseases", [], ["C05.116"], [DISEASE]),
    # cardiovascular leaves
    ("D054549", "Takotsubo Cardiomyopathy",
     ["broken heart syndrome", "apical ballooning syndrome", "stress cardiomyopathy", "takotsubo syndrome"],
     ["C14.280.238.900"], [DISEASE]),
    ("D009203", "Myocardial Infarction", ["heart attack"], ["C14.280.647.500", "C14.907.585.500"], [DISEASE]),
    ("D001145", "Arrhythmias, Cardiac", ["cardiac arrhythmia", "arrhythmia"], ["C14.280.067"], [DISEASE]),
    ("D006333", "Heart Failure", ["cardiac failure"], ["C14.280.434"], [DISEASE]),
    ("D003324", "Coronary Artery Disease", ["coronary disease"], ["C14.280.647.250"], [DISEASE]),
    ("D006973", "Hypertension", ["high blood pressure"], ["C14.907.489"], [DISEASE]),
    ("C562435", "Reverse Takotsubo Cardiomyopathy", ["inverted takotsubo"], [], [DISEASE]),
    # nervous system leaves
    ("D004827", "Epilepsy", ["seizure disorder"], ["C10.228.140.490"], [DISEASE]),
    ("D020521", "Stroke", ["cerebrovascular accident"], ["C10.228.140.300.775", "C14.907.253.855"], [DISEASE]),
    ("D013345", "Subarachnoid Hemorrhage", [], ["C10.228.140.300.535.800"], [DISEASE]),
    ("D020275", "Guillain-Barre Syndrome", [], ["C10.668.829.800.300"], [DISEASE]),
    ("D000544", "Alzheimer Disease", ["alzheimer's disease", "senile dementia of the alzheimer type"],
     ["C10.228.140.380.100", "F03.615.400.100"], [DISEASE]),
    ("D003704", "Dementia", [], ["C10.228.140.380"], [DISEASE]),
    ("D013494", "Supranuclear Palsy, Progressive", ["progressive supranuclear palsy"],
     ["C10.228.140.079.862.800"], [DISEASE]),
    ("D009103", "Multiple Sclerosis", ["disseminated sclerosis"], ["C10.114.375.500", "C20.111.258.250.500"],
     [DISEASE]),
    ("C536599", "Alzheimer Disease, Early Onset", [], [], [DISEASE]),
    ("C565143", "Alzheimer Disease, Familial, Type 3", [], [], [DISEASE]),
    # eye
    ("D008268", "Macular Degeneration", [], ["C11.768.585"], [DISEASE]),
    ("D009901", "Optic Nerve Diseases", ["optic neuropathy"], ["C10.292.700", "C11.640"], [DISEASE]),
    ("D014125", "Toxoplasmosis, Ocular", ["ocular toxoplasmosis"], ["C01.610.752.800.810", "C11.941.879.780.880.810"],
     [DISEASE]),
    ("D002825", "Chorioretinitis", [], ["C11.768.257"], [DISEASE]),
    ("D014605", "Uveitis", [], ["C11.941"], [DISEASE]),
    # nutrition
    ("D014806", "Vitamin B 12 Deficiency", ["vitamin b12 deficiency", "cobalamin deficiency"],
     ["C18.654.521.500.133.699.827"], [DISEASE]),
    ("D014808", "Vitamin D Deficiency", ["hypovitaminosis d"], ["C18.654.521.500.133.770"], [DISEASE]),
    ("D012279", "Rickets", [], ["C05.116.198.816", "C18.654.521.500.133.770.734"], [DISEASE]),
    ("D000740", "Anemia", ["anaemia"], ["C15.378.071"], [DISEASE]),
    ("D000752", "Anemia, Pernicious", ["pernicious anemia"], ["C15.378.071.141.150.150"], [DISEASE]),
    ("D010018", "Osteomalacia", [], ["C05.116.198.579", "C18.654.521.500.133.770.579"], [DISEASE]),
    # respiratory
    ("D001249", "Asthma", ["bronchial asthma"], ["C08.127.108", "C08.381.495.108"], [DISEASE]),
    ("D001991", "Bronchitis", [], ["C08.127.446"], [DISEASE]),
    # mental
    ("D012559", "Schizophrenia", [], ["F03.700.750"], [MENTAL]),
    ("D011618", "Psychotic Disorders", ["psychosis", "psychoses"], ["F03.700"], [MENTAL]),
    ("D003866", "Depressive Disorder", ["depression"], ["F03.600.300"], [MENTAL]),
    ("D001714", "Bipolar Disorder", ["manic depressive illness"], ["F03.600.150"], [MENTAL]),
    ("D013315", "Stress, Psychological", ["emotional stress", "psychological stress"], ["F02.830.900"], [MENTAL]),
    # agents and other
    ("D014807", "Vitamin D", ["cholecalciferol"], ["D04.210.500.247.808"], [DRUG]),
    ("D002117", "Calcitriol", [], ["D04.210.500.247.808.197.224"], [DRUG]),
    ("D004873", "Ergocalciferols", ["ergocalciferol", "vitamin d2"], ["D04.210.500.247.808.197.265"], [DRUG]),
    ("D010710", "Phosphates", ["phosphate"], ["D01.695.700"], [DRUG]),
    ("D002118", "Calcium", [], ["D01.268.556.166"], [DRUG]),
    ("D004837", "Epinephrine", ["adrenaline"], ["D02.033.100.291.500"], [DRUG]),
    ("D014805", "Vitamin B 12", ["vitamin b12", "cobalamin"], ["D03.633.100.300.925"], [DRUG]),
    ("D002188", "Cannabis", ["marijuana", "hashish"], ["B01.650.940.800.575.100.200"], [PLANT]),
    ("D008459", "Measles virus", [], ["B04.820.455.600.500"], [VIRUS]),
    ("D008457", "Measles", ["rubeola"], ["C01.925.782.580.600.500"], [DISEASE]),
    ("D041623", "Tomography, Optical Coherence", ["optical coherence tomography"], ["E01.370.350.825.500"], [DIAG]),
    ("D058048", "Alzheimer Vaccines", [], ["D20.215.894.050"], [IMMUNO]),
    ("D006113", "United Kingdom", [], ["Z01.586.950"], [GEO]),
    ("D012160", "Retina", [], ["A09.371.729"], [ANAT]),
]

NAME = {cid: name for cid, name, *_ in CONCEPTS}


def write_dictionary():
    lines = []
    for cid, name, syn, trees, types in CONCEPTS:
        lines.append(json.dumps({"id": cid, "preferred_term": name, "synonyms": syn,
                                 "tree_numbers": trees, "semantic_types": types}))
    (HERE / "dictionary.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")


docs = []


def research(doc_id, date, title, abstract=None, full_text=None):
    d = {"doc_id": doc_id, "source_kind": "research", "title": title, "pub_date": date,
         "url": f"https://literature.example.org/{doc_id}"}
    if abstract is not None:
        d["abstract"] = abstract
    if full_text is not None:
        d["full_text"] = full_text
    docs.append(d)


def encyclopedia(doc_id, date, subject, title, body):
    docs.append({"doc_id": doc_id, "source_kind": "encyclopedia", "title": title, "abstract": body,
                 "pub_date": date, "url": f"https://encyclopedia.example.org/{doc_id}",
                 "subject_concept": subject})


def scenario_docs():
    # Takotsubo cardiomyopathy
    research("pm-tako-epi-1", "2005-03-14", "Takotsubo cardiomyopathy after a generalized epileptic seizure",
             "A case of stress cardiomyopathy following epilepsy in an elderly woman.")
    research("pm-tako-epi-2", "2011-06-02", "Seizure-induced takotsubo syndrome: a report of two cases",
             "Epilepsy may trigger apical ballooning syndrome.")
    research("pm-tako-epi-3", "2013-09-20", "Epilepsy as a trigger of broken heart syndrome",
             "We review reported cases of takotsubo cardiomyopathy in patients with epilepsy.")
    research("pm-tako-epi-4", "2014-01-07", "Takotsubo cardiomyopathy and status epilepticus",
             "Recurrent seizures in epilepsy were followed by takotsubo cardiomyopathy.")
    research("pm-tako-epi-5", "2016-11-30", "Neurogenic stunned myocardium: epilepsy and takotsubo syndrome")
    research("pm-tako-mi-1", "2004-05-11", "Takotsubo cardiomyopathy mimicking acute myocardial infarction",
             "Transient apical ballooning without coronary artery disease.")
    research("pm-tako-mi-2", "2008-02-19", "Broken heart syndrome versus myocardial infarction",
             "Angiography showed no coronary disease; emotional stress preceded symptoms.")
    research("pm-tako-mi-3", "2012-10-03", "Stress cardiomyopathy: differential diagnosis from heart attack",
             "Patients presented with chest pain; heart failure developed in some.")
    research("pm-tako-hf-1", "2010-07-15", "Heart failure complicating takotsubo cardiomyopathy",
             "Cardiac arrhythmia and heart failure were the most common complications.")
    research("pm-tako-hf-2", "2015-04-22", "Outcome of takotsubo syndrome with acute heart failure",
             "Epinephrine levels were elevated; arrhythmia occurred in a minority.")
    research("pm-tako-htn-1", "2009-08-08", "Hypertension and takotsubo cardiomyopathy in postmenopausal women")
    research("pm-tako-htn-2", "2017-12-01", "Takotsubo syndrome: prevalence of hypertension and diabetes",
             "Hypertension was present in two thirds of the cohort.")
    research("pm-tako-stroke-1", "2012-03-29", "Takotsubo cardiomyopathy after acute ischemic stroke",
             "Insular stroke may precipitate stress cardiomyopathy.")
    research("pm-tako-stroke-2", "2018-06-17", "Stroke and subarachnoid hemorrhage as triggers of takotsubo syndrome",
             "Neurological emergencies including subarachnoid hemorrhage were reviewed.")
    research("pm-tako-sah-1", "2007-01-25", "Subarachnoid hemorrhage with takotsubo-like cardiomyopathy",
             "Apical ballooning syndrome after subarachnoid hemorrhage.")
    research("pm-tako-gbs-1", "2013-05-05", "Guillain-Barre syndrome complicated by takotsubo cardiomyopathy")
    research("pm-tako-gbs-2", "2019-02-14", "Dysautonomia in Guillain-Barre syndrome and broken heart syndrome")
    research("pm-tako-rev-1", "2014-08-30", "Reverse takotsubo cardiomyopathy in a young woman",
             "An inverted takotsubo pattern distinct from classic takotsubo syndrome.")
    research("pm-tako-rev-2", "2020-10-10", "Clinical features of reverse takotsubo cardiomyopathy",
             "Compared with typical takotsubo cardiomyopathy, emotional stress was frequent.")
    research("pm-tako-stress-1", "2006-09-09", "Emotional stress and the broken heart syndrome",
             "Adrenaline surge following psychological stress.")
    encyclopedia("enc-takotsubo", "2021-01-15", "D054549", "Takotsubo Cardiomyopathy",
                 "Takotsubo cardiomyopathy presents like myocardial infarction without coronary artery disease. "
                 "Emotional stress and epinephrine release are implicated; heart failure may occur.")

    # Measles virus and multiple sclerosis
    for i, date in enumerate(["1971-04-01", "1974-09-12", "1978-02-03", "1982-06-21", "1986-11-05", "2003-07-30"], 1):
        research(f"pm-ms-measles-{i}", date, "Measles virus antibodies in multiple sclerosis",
                 "Serum and cerebrospinal fluid titres against measles virus were raised in multiple sclerosis.")
    research("pm-ms-1", "1995-05-05", "Optic neuropathy as the first sign of multiple sclerosis")
    research("pm-ms-2", "2009-03-03", "Vitamin D deficiency and multiple sclerosis risk",
             "Low vitamin d levels were associated with disseminated sclerosis.")
    research("pm-ms-3", "2016-01-12", "Hypovitaminosis D in multiple sclerosis: a cohort study")

    # Rickets and pharmacological agents
    research("pm-rick-1", "1964-03-10", "Vitamin D treatment of rickets in children",
             "Cholecalciferol and ergocalciferol doses were compared.")
    research("pm-rick-2", "1972-08-15", "Calcitriol in vitamin D resistant rickets",
             "Phosphate supplementation was combined with calcitriol.")
    research("pm-rick-3", "1988-11-20", "Rickets and osteomalacia: response to vitamin D2",
             "Ergocalciferol corrected rickets in most children.")
    research("pm-rick-4", "1999-04-04", "Nutritional rickets in the United Kingdom",
             "Vitamin D deficiency and low calcium intake cause rickets.")
    research("pm-rick-5", "2011-02-28", "Calcitriol therapy for hypophosphatemic rickets",
             "Calcitriol improved growth; vitamin d levels were monitored.")
    research("pm-rick-6", "2018-09-09", "Prevention of rickets with vitamin D supplementation",
             "Vitamin D deficiency remains common.")
    encyclopedia("enc-rickets", "2020-06-01", "D012279", "Rickets",
                 "Rickets results from vitamin D deficiency or inadequate calcium and phosphate. "
                 "Treatment includes vitamin D and calcium.")

    # Asthma and vitamin D deficiency
    for i, date in enumerate(["2009-10-10", "2011-05-15", "2013-03-21", "2016-08-08"], 1):
        research(f"pm-asthma-vitd-{i}", date, "Vitamin D deficiency and asthma severity",
                 "Hypovitaminosis d was associated with exacerbations of bronchial asthma.")
    research("pm-asthma-1", "1985-01-01", "Asthma and bronchitis in children", "Bronchitis preceded asthma.")
    research("pm-asthma-2", "1997-07-07", "Chronic bronchitis versus asthma in adults")
    encyclopedia("enc-asthma", "2019-04-04", "D001249", "Asthma",
                 "Asthma is a chronic disease of the airways; bronchitis can coexist.")

    # Alzheimer disease
    research("pm-alz-md-1", "2006-04-04", "Alzheimer disease and age-related macular degeneration",
             "Shared amyloid deposits in the retina.")
    research("pm-alz-md-2", "2010-12-12", "Macular degeneration is associated with Alzheimer's disease")
    research("pm-alz-md-3", "2015-06-06", "Retinal markers linking macular degeneration and Alzheimer disease")
    research("pm-alz-oct-1", "2012-02-02", "Optical coherence tomography of the retina in Alzheimer disease")
    research("pm-alz-oct-2", "2016-05-05", "Retinal nerve fibre layer thinning in Alzheimer's disease",
             "Optical coherence tomography detected thinning.")
    research("pm-alz-oct-3", "2019-09-19", "Optical coherence tomography for early diagnosis of Alzheimer disease")
    research("pm-alz-psp-1", "2001-01-21", "Progressive supranuclear palsy misdiagnosed as Alzheimer disease")
    research("pm-alz-dem-1", "1991-03-03", "Dementia subtypes: Alzheimer disease and vascular dementia")
    research("pm-alz-dem-2", "2003-10-10", "Dementia progression in Alzheimer's disease")
    research("pm-alz-vac-1", "2008-08-08", "Alzheimer vaccines: lessons from immunotherapy trials",
             "Alzheimer disease immunotherapy.")
    encyclopedia("enc-alzheimer", "2022-02-02", "D000544", "Alzheimer Disease",
                 "Alzheimer disease is the most common dementia. Differential diagnosis includes "
                 "progressive supranuclear palsy.")

    # Cannabis and mental disorders
    for i, date in enumerate(["1987-05-05", "1998-06-06", "2004-04-14", "2007-07-17", "2012-12-12", "2017-03-03"], 1):
        research(f"pm-cann-psy-{i}", date, "Cannabis use and risk of psychosis",
                 "Marijuana consumption increased the risk of psychotic symptoms and schizophrenia.")
    research("pm-cann-dep-1", "2002-02-02", "Cannabis and depression in young adults")
    research("pm-cann-dep-2", "2014-04-04", "Marijuana use, depression and bipolar disorder")
    research("pm-cann-bip-1", "2019-11-11", "Cannabis and manic depressive illness")

    # Vitamin B12 deficiency
    research("pm-b12-1", "1968-06-06", "Optic neuropathy in vitamin B12 deficiency")
    research("pm-b12-2", "1979-09-09", "Vitamin B12 deficiency presenting with optic neuropathy and anemia")
    research("pm-b12-3", "1983-03-03", "Pernicious anemia and cobalamin deficiency",
             "Vitamin B12 malabsorption leads to anaemia.")
    research("pm-b12-4", "2005-05-05", "Cobalamin deficiency and dementia in the elderly",
             "Vitamin b12 deficiency, anemia and dementia.")
    research("pm-b12-5", "2013-03-13", "Vitamin B12 deficiency: neurological and haematological features",
             "Anemia and optic neuropathy were documented; dementia was rare.")

    # Ocular toxoplasmosis
    research("pm-toxo-1", "1976-07-07", "Ocular toxoplasmosis and chorioretinitis",
             "Recurrent chorioretinitis with uveitis.")
    research("pm-toxo-2", "1993-09-03", "Chorioretinitis in ocular toxoplasmosis: treatment outcomes")
    research("pm-toxo-3", "2010-10-01", "Uveitis secondary to ocular toxoplasmosis")


# Concepts filler documents may mention. Scenario-critical query concepts are
# left out so the scenario edges stay exactly as authored above.
FILLER_POOL = ["D009203", "D006973", "D006333", "D001145", "D003324", "D020521", "D003704", "D000740",
               "D001991", "D003866", "D001714", "D012559", "D002118", "D014805", "D014605", "D008457",
               "D006113", "D012160", "D010018", "D002825", "D014807"]

FILLER_TITLES = [
    "Clinical study of {a} in {b} patients",
    "{a} and {b}: a population-based analysis",
    "Risk factors for {a}",
    "A review of {a}, {b} and {c}",
    "Case report: unusual presentation of {a}",
    "Outcomes after hospital admission",
]

FILLER_ABSTRACTS = [
    "We studied {a} in a cohort with {b}.",
    "Patients with {a} were followed for five years.",
    "No association with {b} was observed.",
    "Incidence of {a} rose over the study period while {c} declined.",
]


def filler_docs(rng, count):
    for i in range(count):
        a, b, c = (NAME[x].lower() for x in rng.sample(FILLER_POOL, 3))
        year = rng.randint(1962, 2023)
        title = rng.choice(FILLER_TITLES).format(a=a, b=b, c=c)
        abstract = rng.choice(FILLER_ABSTRACTS).format(a=a, b=b, c=c) if rng.random() < 0.7 else None
        full = None
        if rng.random() < 0.25:
            full = " ".join(rng.choice(FILLER_ABSTRACTS).format(a=a, b=b, c=c) for _ in range(3))
        date = f"{year}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}" if rng.random() < 0.8 else str(year)
        research(f"pm-fill-{i + 1:03d}", date, title, abstract, full)


# Asthma (D001249) against six neighbours, one per (research documents,
# encyclopedia hit) combination.
def threshold_docs():
    out = []

    def paper(doc_id, title):
        out.append({"doc_id": doc_id, "source_kind": "research", "title": title, "pub_date": "2015"})

    def page(doc_id, subject, title, body):
        out.append({"doc_id": doc_id, "source_kind": "encyclopedia", "title": title, "abstract": body,
                    "pub_date": "2020", "subject_concept": subject})

    # (0, F): only a page about a third concept mentions both.
    page("th-enc-rickets", "D012279", "Rickets", "Unrelated to asthma or bronchitis.")
    # (1, F)
    paper("th-dep-1", "Depression in asthma")
    # (2, F)
    paper("th-anemia-1", "Anemia in asthma")
    paper("th-anemia-2", "Asthma with anaemia")
    # (0, T): the page about asthma mentions the neighbour.
    page("th-enc-asthma", "D001249", "Asthma", "Hypovitaminosis D may worsen it.")
    # (1, T): the page is about the neighbour.
    paper("th-scz-1", "Schizophrenia and asthma")
    page("th-enc-scz", "D012559", "Schizophrenia", "Comorbid asthma is reported.")
    # (2, T)
    paper("th-stroke-1", "Stroke after asthma")
    paper("th-stroke-2", "Asthma and stroke risk")
    page("th-enc-asthma-2", "D001249", "Bronchial asthma", "Stroke risk may rise.")
    return out


def small_corpora():
    groups = {
        "takotsubo": "pm-tako-", "measles": "pm-ms-", "rickets": "pm-rick-", "asthma": "pm-asthma-",
        "alzheimer": "pm-alz-", "cannabis": "pm-cann-", "b12": "pm-b12-", "toxo": "pm-toxo-",
    }
    enc = {"takotsubo": "enc-takotsubo", "rickets": "enc-rickets", "asthma": "enc-asthma",
           "alzheimer": "enc-alzheimer"}
    out = {}
    for name, prefix in groups.items():
        members = [d for d in docs if d["doc_id"].startswith(prefix) or d["doc_id"] == enc.get(name)]
        for part in range(0, len(members), 20):
            out[name if part == 0 else f"{name}-{part // 20 + 1}"] = members[part:part + 20]
    fillers = [d for d in docs if d["doc_id"].startswith("pm-fill-")]
    out["filler"] = [d for d in fillers if "full_text" in d][:20]
    # Repeated mentions across all three zones.
    out["zones"] = [
        {"doc_id": "z-1", "source_kind": "research", "title": "Rickets, rickets and osteomalacia",
         "abstract": "Vitamin D deficiency causes rickets; calcium and phosphate help.",
         "full_text": "Rickets. Osteomalacia. Vitamin D deficiency. Rickets again with anemia.", "pub_date": "1990"},
        {"doc_id": "z-2", "source_kind": "research", "title": "Anemia",
         "full_text": "Anemia, anaemia, pernicious anemia and vitamin b12 deficiency.", "pub_date": "1991-02"},
        {"doc_id": "z-3", "source_kind": "encyclopedia", "title": "Bone softening",
         "abstract": "Osteomalacia in adults; rickets in children.", "full_text": "Calcium and phosphate.",
         "pub_date": "2001-01-01", "subject_concept": "D010018"},
        {"doc_id": "z-4", "source_kind": "research", "title": "No dictionary terms here", "pub_date": "2002"},
    ]
    return out


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as out:
        for d in records:
            out.write(json.dumps(d, ensure_ascii=False) + "\n")


def main():
    write_dictionary()
    scenario_docs()
    rng = random.Random(1983)
    filler_docs(rng, 120 - len(docs))
    with open(HERE / "corpus.jsonl", "w", encoding="utf-8") as out:
        for d in docs:
            out.write(json.dumps(d, ensure_ascii=False) + "\n")
    (HERE / "weights.json").write_text(json.dumps(
        {"z_kind": "unit", "w": {"TT": 8, "TA": 4, "TF": 2, "AA": 2, "AF": 1, "FF": 1}}) + "\n")
    with open(HERE / "corpus_with_malformed.jsonl", "w", encoding="utf-8") as out:
        for i, d in enumerate(docs[:10]):
            out.write((json.dumps(d) if i != 4 else '{"doc_id": "broken", "title": ') + "\n")
    write_jsonl(HERE / "threshold_corpus.jsonl", threshold_docs())
    (HERE / "small").mkdir(exist_ok=True)
    for name, records in small_corpora().items():
        assert len(records) <= 20, name
        write_jsonl(HERE / "small" / f"{name}.jsonl", records)
    print(f"{len(CONCEPTS)} concepts, {len(docs)} documents")


if __name__ == "__main__":
    main()
